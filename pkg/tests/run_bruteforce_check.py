"""Pre-build verification driver: compute the named dimension vectors with the
brute-force oracles and print them.  Run directly: python tests/run_bruteforce_check.py
"""

import time

from bruteforce import (
    cotor_dims_bruteforce,
    hochschild_dims_bruteforce,
)


def dual_poly_square():
    # A = k[x]/x^2, basis {1, x}
    mul = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]
    left = [[[mul[i][j][k] for j in range(2)] for k in range(2)] for i in range(2)]
    left = [[[mul[i][j][k] for j in range(2)] for k in range(2)] for i in range(2)]
    # regular actions: L_i[k][j] = mul[i][j][k], R_i[k][j] = mul[j][i][k]
    L = [[[mul[i][j][k] for j in range(2)] for k in range(2)] for i in range(2)]
    R = [[[mul[j][i][k] for j in range(2)] for k in range(2)] for i in range(2)]
    return mul, L, R


def matrix_units_mul(n):
    # basis E_{ab} in lex order, dim n^2
    dim = n * n
    idx = lambda a, b: a * n + b
    mul = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    if b == c:
                        mul[idx(a, b)][idx(c, d)][idx(a, d)] = 1
    return mul


def regular_actions(mul, dim):
    L = [[[mul[i][j][k] for j in range(dim)] for k in range(dim)] for i in range(dim)]
    R = [[[mul[j][i][k] for j in range(dim)] for k in range(dim)] for i in range(dim)]
    return L, R


def main():
    t0 = time.time()

    mul2, L2, R2 = dual_poly_square()

    print("A = k[x]/x^2 over F_2, B = A:",
          hochschild_dims_bruteforce(mul2, L2, R2, 2, 2, 3, 2))

    triv = [[[1]], [[0]]]
    print("A = k[x]/x^2 over F_2, B = k(x)k:",
          hochschild_dims_bruteforce(mul2, triv, triv, 2, 1, 3, 2))

    mul4 = matrix_units_mul(2)
    L4, R4 = regular_actions(mul4, 4)
    print("A = M_2(F_5), B = A:",
          hochschild_dims_bruteforce(mul4, L4, R4, 4, 4, 3, 5))

    # A = k x k, M = k (first factor), N = k (second factor)
    mulkk = [[[1, 0], [0, 0]], [[0, 0], [0, 1]]]
    lkk = [[[1]], [[0]]]
    rkk = [[[0]], [[1]]]
    print("A = k x k over F_2, B = first(x)second:",
          hochschild_dims_bruteforce(mulkk, lkk, rkk, 2, 1, 3, 2))
    print("A = k x k over Q:",
          hochschild_dims_bruteforce(mulkk, lkk, rkk, 2, 1, 3, None))

    # Cotor side. C = D(k[x]/x^2): comul[k][i][j] = mul[i][j][k]
    comul2 = [[[mul2[i][j][k] for j in range(2)] for i in range(2)] for k in range(2)]
    rho = [[[1, 0]]]   # trivial right comodule: b -> b (x) 1*
    lam = [[[1], [0]]]  # trivial left comodule
    print("Cotor over D(k[x]/x^2) F_2, M = N = k:",
          cotor_dims_bruteforce(comul2, rho, lam, 2, 1, 1, 3, 2))

    # C = D(M_2(F_5)), M = column comodule, N = row comodule
    comul4 = [[[mul4[i][j][k] for j in range(4)] for i in range(4)] for k in range(4)]
    unit = lambda a, b: [[1 if (r, c) == (a, b) else 0 for c in range(2)] for r in range(2)]
    col_act = [unit(0, 0), unit(0, 1), unit(1, 0), unit(1, 1)]
    row_act = [[[col_act[i][c][r] for c in range(2)] for r in range(2)] for i in range(4)]
    rho4 = [[[col_act[i][m2][m] for i in range(4)] for m2 in range(2)] for m in range(2)]
    lam4 = [[[row_act[k][n2][n] for n2 in range(2)] for k in range(4)] for n in range(2)]
    print("Cotor over D(M_2(F_5)), col, row:",
          cotor_dims_bruteforce(comul4, rho4, lam4, 4, 2, 2, 3, 5))
    print("cotensor dims are the degree-0 entries above")

    print("elapsed: %.1fs" % (time.time() - t0))


if __name__ == "__main__":
    main()
