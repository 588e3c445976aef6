"""Float oracle for coalition states, compared with the exact report.

Builds both codes from generator strings with numpy, encodes several
secrets, traces out the complement of every coalition below threshold and
lists the coalitions whose state depends on the secret.
"""
import itertools
import json
import subprocess
import sys

import numpy as np

P = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]]),
    "Z": np.diag([1, -1]).astype(complex),
}

CODES = {
    "pentagon": (["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"], 3),
    "heptagon": (["IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"], 4),
}


def op(s):
    m = np.array([[1]], dtype=complex)
    for c in s:
        m = np.kron(m, P[c])
    return m


def logical_states(gens):
    n = len(gens[0])
    proj = np.eye(2**n, dtype=complex)
    for g in gens:
        proj = proj @ (np.eye(2**n) + op(g)) / 2
    zero = proj[:, 0] / np.linalg.norm(proj[:, 0])
    one = op("X" * n) @ zero
    return zero, one


def reduced(psi, n, keep):
    t = psi.reshape([2] * n)
    rest = [q for q in range(n) if q not in keep]
    t = np.transpose(t, keep + rest).reshape(2 ** len(keep), -1)
    return t @ t.conj().T


def main():
    r = 1 / np.sqrt(2)
    secrets = [(1, 0), (0, 1), (r, r), (r, 1j * r), ((1 + 1j) / 2, -r)]
    report = json.loads(subprocess.run([sys.argv[1], "verify", "protocols", "--json"], capture_output=True,
                                       text=True).stdout)
    details = {c["id"]: c["detail"] for c in report["claims"]}
    ok = True
    for name, (gens, threshold) in CODES.items():
        n = len(gens[0])
        zero, one = logical_states(gens)
        states = [a * zero + b * one for a, b in secrets]
        leaking, mixed = [], 0
        total = 0
        for k in range(1, threshold):
            for keep in itertools.combinations(range(n), k):
                total += 1
                rhos = [reduced(s, n, list(keep)) for s in states]
                if any(not np.allclose(rhos[0], x, atol=1e-9) for x in rhos[1:]):
                    leaking.append("".join(str(q + 1) for q in keep))
                mixed += np.allclose(rhos[0], np.eye(2**k) / 2**k, atol=1e-9)
        detail = details[f"ac07.{name}-no-information"]
        expect_prefix = f"{total - len(leaking)}/{total}"
        reported = detail.split("): ")[1].split() if "): " in detail else []
        agree = detail.startswith(expect_prefix) and reported == leaking
        if name == "heptagon":
            agree = agree and f"{mixed} maximally mixed" in detail
        print(f"{name}: oracle {expect_prefix} independent, {mixed} mixed, leaking {leaking}; report '{detail}'")
        ok = ok and agree
    print("agree" if ok else "DISAGREE")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
