#!/usr/bin/env python3
"""Independent high-precision oracle for the frozen expected values.

Everything here is computed with mpmath at 200 digits directly from the
defining formulas (products, sums, dense symmetric eigenproblems). It shares
no code with the C++ library. Regenerate with:

    python3 tests/oracles/freeze_values.py > tests/oracle_values.hpp
"""
from mpmath import mp, mpf, mpc, sqrt, exp, matrix, eigsy, fprod, fsum

mp.dps = 200


def family(kind, count):
    if kind == "geometric":
        return [1 - mpf(2) ** (-n) for n in range(1, count + 1)]
    return [1 - mpf(2) ** (-n * n) for n in range(1, count + 1)]


def rho(a, b):
    return abs(a - b) / abs(1 - a * b)


def one_minus_delta(z):
    out = []
    for j in range(len(z)):
        out.append(1 - fprod([rho(z[j], z[k]) for k in range(len(z)) if k != j]))
    return out


def gram(z):
    n = len(z)
    g = matrix(n, n)
    for a in range(n):
        for b in range(n):
            g[a, b] = sqrt((1 - z[a] ** 2) * (1 - z[b] ** 2)) / (1 - z[a] * z[b])
    return g


def aob_defect(z, N):
    ev = eigsy(gram(z[N - 1:]), eigvals_only=True)
    ev = sorted(ev)
    return max(ev[-1] - 1, 1 - ev[0])


def max_box_sum(z, N, A):
    best = mpf(0)
    for n in range(N - 1, len(z)):
        sn = 1 - z[n]
        depth = min(mpf(1), A * sn)
        s = fsum([1 - z[k] for k in range(len(z)) if k != n and 1 - z[k] <= depth])
        best = max(best, s / sn)
    return best


def r_atoms_minus_one(z, N):
    tail = z[N - 1:]
    best = mpf(0)
    for a in tail:
        best = max(best, fsum([1 - rho(a, b) ** 2 for b in tail]))
    return sqrt(best) - 1


def num(x):
    return mp.nstr(x, 20, min_fixed=-400, max_fixed=400)


def emit_array(name, values):
    body = ",\n    ".join(num(v) for v in values)
    print(f"inline constexpr std::array<double, {len(values)}> {name} = {{\n    {body}}};")


def main():
    print("// Generated by tests/oracles/freeze_values.py (mpmath, 200 digits). Do not edit.")
    print("#pragma once\n\n#include <array>\n\nnamespace thinseq::oracle {\n")

    sg = family("supergeometric", 12)
    geo = family("geometric", 12)
    emit_array("kSuperGeometric12OneMinusDelta", one_minus_delta(sg))
    emit_array("kGeometric12OneMinusDelta", one_minus_delta(geo))

    tails = [4, 6, 8, 10]
    for label, z in (("SuperGeometric", sg), ("Geometric", geo)):
        omd = one_minus_delta(z)
        emit_array(f"k{label}OneMinusTailDelta", [max(omd[N - 1:]) for N in tails])
        emit_array(f"k{label}AobDefect", [aob_defect(z, N) for N in tails])
        emit_array(f"k{label}MaxBoxSumA2", [max_box_sum(z, N, 2) for N in tails])
        emit_array(f"k{label}KernelConstantAtomsMinusOne", [r_atoms_minus_one(z, N) for N in tails])

    emit_array("kSuperGeometric12AobDefectN1to10", [aob_defect(sg, N) for N in range(1, 11)])
    emit_array("kGeometric12AobDefectN1to10", [aob_defect(geo, N) for N in range(1, 11)])

    # Jones weight for Z = {0.5} at z = 0.
    z1, z = mpf("0.5"), mpf(0)
    ratio = (1 - z1 ** 2) / (1 - z1 * z)
    expo = ((1 + z1 * z) / (1 - z1 * z) - (1 + z1 * z1) / (1 - z1 * z1)) * (1 - z1 ** 2)
    print(f"inline constexpr double kJonesWeightHalfAtOrigin = {num(ratio ** 2 * exp(-expo))};")

    # Interpolation constant for nodes {0, 0.5}, targets (1, -1): 2 + sqrt(3).
    print(f"inline constexpr double kTwoNodeAlternatingConstant = {num(2 + sqrt(3))};")

    print("\n}  // namespace thinseq::oracle")


if __name__ == "__main__":
    main()
