"""Truncated-series engines for the two functional equations.

Both engines compute the counting sequence of (m+1)-nonnesting partitions
with exact integer coefficients.

* The u-engine iterates the label generating function order by order in t:
  each step combines the previous t-coefficient (a polynomial in u_1..u_m)
  through two families of divided differences, which must divide exactly.

* The x-engine iterates the rearranged kernel-form equation
      F <- s + s*t*h*F
           - s*t*( (s/(s-x_1)) * F(0,x_2,..,x_m;t)/x_1
                   + sum_j F(.., x_{j-1}+x_j, 0, ..;t)/x_j )
  with s = 1+x_1+..+x_m and h = 1 + 1/x_1 + .. + 1/x_m, starting from
  F = s. One application extends correctness by one t-order. States are
  kept finite by the w-grading: a monomial at t-order k is retained iff its
  total x-degree is <= W - k. Every right-hand operator moves a monomial of
  weight w = degree + order to monomials of weight >= w (divisions by a
  single x cost one degree but always ride a factor of t), so the grading
  is closed under the iteration; `x_engine(..., weight_bound=2*N)` lets
  tests confirm counts are unchanged under a doubled bound.

Coefficients of committed states are non-negative integers; intermediates
may carry exponents down to -1 per variable. Anything below, or a negative
exponent surviving into a committed state, raises SeriesConsistencyError.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .polyops import (
    constant_term_of_product,
    min_exponent,
    poly_add,
    poly_eval,
    poly_mul,
    poly_sub,
    truncate_total_degree,
    zero_mono,
)


class SeriesConsistencyError(RuntimeError):
    """An exactness guarantee failed; signals an implementation bug."""


# ---------------------------------------------------------------------------
# u-engine

def _collapse_u1(p):
    """p with u_1 = 1, then times u_1 (exponent set to 1)."""
    out = {}
    for e, c in p.items():
        key = (1,) + e[1:]
        s = out.get(key, 0) + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def _merge_pair(p, j):
    """p with u_{j-1} <- u_{j-1} u_j and u_j <- 1 (1-based j >= 2)."""
    out = {}
    for e, c in p.items():
        key = e[: j - 1] + (e[j - 2],) + e[j:]
        s = out.get(key, 0) + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def _divide_by_var_minus_one(p, var):
    """Exact division by (u_var - 1), var 0-based.

    Synthetic division per residual monomial: q_k = sum_{i>k} c_i, with
    remainder sum_i c_i, which must vanish (the functional equation
    guarantees divisibility; a nonzero remainder is a bug).
    """
    groups = {}
    for e, c in p.items():
        rest = e[:var] + e[var + 1 :]
        groups.setdefault(rest, {})[e[var]] = c
    out = {}
    for rest, coeffs in groups.items():
        if sum(coeffs.values()) != 0:
            raise SeriesConsistencyError(
                "nonzero remainder in divided difference"
            )
        running = 0
        top = max(coeffs)
        for k in range(top - 1, min(coeffs) - 1, -1):
            running += coeffs.get(k + 1, 0)
            if running:
                out[rest[:var] + (k,) + rest[var:]] = running
    return out


def _shift(p, upto):
    """Multiply by u_1 u_2 .. u_upto (add 1 to the first `upto` exponents)."""
    return {
        tuple(x + 1 if i < upto else x for i, x in enumerate(e)): c
        for e, c in p.items()
    }


def _u_step(p, m):
    new = _shift(p, m)
    # divided difference in u_1, times u_1
    diff = poly_sub(p, _collapse_u1(p))
    new = poly_add(new, _shift(_divide_by_var_minus_one(diff, 0), 1))
    for j in range(2, m + 1):
        diff = poly_sub(p, _merge_pair(p, j))
        new = poly_add(new, _shift(_divide_by_var_minus_one(diff, j - 1), j))
    return new


def u_series(m: int, N: int) -> list[dict]:
    """t-coefficients P_0..P_N of the label generating function; P_n maps
    exponent tuples (the labels) to counts."""
    if m < 1:
        raise ValueError("m must be >= 1")
    p = {(1,) * m: 1}
    out = [p]
    for _ in range(N):
        p = _u_step(p, m)
        out.append(p)
    return out


def u_engine(m: int, N: int) -> list[int]:
    """Counting sequence via the u-equation: P_n at u_1=..=u_m=1."""
    return [sum(p.values()) for p in u_series(m, N)]


# ---------------------------------------------------------------------------
# x-engine

def _s_poly(m):
    p = {zero_mono(m): 1}
    for i in range(m):
        p[tuple(1 if k == i else 0 for k in range(m))] = 1
    return p


def _h_poly(m):
    p = {zero_mono(m): 1}
    for i in range(m):
        p[tuple(-1 if k == i else 0 for k in range(m))] = 1
    return p


@lru_cache(maxsize=None)
def _geometric_inverse_cached(m, D):
    inv = {zero_mono(m): 1}
    if m == 1:
        return inv
    q = {}
    for i in range(1, m):
        q[tuple(1 if k == i else 0 for k in range(m))] = -1
    power = dict(inv)
    for _ in range(D):
        power = poly_mul(power, q, D)
        if not power:
            break
        inv = poly_add(inv, power)
    return inv


def geometric_inverse(m: int, D: int) -> dict:
    """Power series of 1/(1 + x_2 + .. + x_m) to total degree <= D."""
    if D < 0:
        raise ValueError("D must be >= 0")
    return dict(_geometric_inverse_cached(m, D))


def substitute_pair(P: dict, j: int) -> dict:
    """x_{j-1} <- x_{j-1} + x_j and x_j <- 0, by binomial expansion.

    Total degree of every monomial is preserved. Requires a true
    polynomial (no negative exponents) and 2 <= j <= m.
    """
    if not P:
        return {}
    m = len(next(iter(P)))
    if not 2 <= j <= m:
        raise ValueError(f"j={j} out of range for m={m}")
    if min_exponent(P) < 0:
        raise SeriesConsistencyError("substitute_pair on a Laurent input")
    out = {}
    for e, c in P.items():
        if e[j - 1] != 0:
            continue  # x_j -> 0 kills the monomial
        a = e[j - 2]
        for i in range(a + 1):
            key = e[: j - 2] + (a - i, i) + e[j:]
            s = out.get(key, 0) + c * comb(a, i)
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def _divide_by_var(p, var):
    out = {}
    for e, c in p.items():
        if e[var] < 0:
            raise SeriesConsistencyError("exponent below -1 in intermediate")
        out[e[:var] + (e[var] - 1,) + e[var + 1 :]] = c
    return out


def _zero_x1_div_x1(p):
    """F(0, x_2, .., x_m) / x_1: keep x_1-free monomials, exponent -> -1."""
    return {(-1,) + e[1:]: c for e, c in p.items() if e[0] == 0}


def _x_step(F, m, max_order, W):
    s = _s_poly(m)
    h = _h_poly(m)
    ginv = _geometric_inverse_cached(m, W)
    new = [dict() for _ in range(max_order + 1)]
    new[0] = truncate_total_degree(_s_poly(m), W)
    for k in range(max_order):
        Fk = F[k] if k < len(F) else {}
        if not Fk:
            continue
        cap = W - (k + 1)
        if cap < 0:
            continue
        pos = poly_mul(poly_mul(Fk, h, cap), s, cap)
        inner = poly_mul(poly_mul(_zero_x1_div_x1(Fk), ginv, cap), s, cap)
        for j in range(2, m + 1):
            inner = poly_add(inner, _divide_by_var(substitute_pair(Fk, j), j - 1))
        new[k + 1] = poly_sub(pos, poly_mul(inner, s, cap))
    for k, pk in enumerate(new):
        if min_exponent(pk) < 0:
            raise SeriesConsistencyError(
                f"negative exponent survived at t-order {k}"
            )
    return new


def x_series(m: int, N: int, weight_bound: int | None = None) -> list[dict]:
    """t-coefficients of the kernel-form series, iterated N+1 times from s.

    Each coefficient is truncated to total x-degree <= weight_bound - order
    (weight_bound defaults to N, which is exact for the constant term; pass
    2*N+2 for full coefficients through t^N).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if N < 0:
        raise ValueError("N must be >= 0")
    W = N if weight_bound is None else weight_bound
    F: list[dict] = [truncate_total_degree(_s_poly(m), W)]
    for r in range(1, N + 2):
        F = _x_step(F, m, min(r, N), W)
    return F


def x_engine(
    m: int,
    N: int,
    weight_bound: int | None = None,
    check_stable: bool = False,
) -> list[int]:
    """Counting sequence via the modified x-equation: [x^0] per t-order.

    With check_stable, one extra iteration is run and the constant terms
    are required not to move.
    """
    F = x_series(m, N, weight_bound)
    zero = zero_mono(m)
    counts = [F[k].get(zero, 0) if k < len(F) else 0 for k in range(N + 1)]
    if check_stable:
        W = N if weight_bound is None else weight_bound
        F2 = _x_step(F, m, N, W)
        again = [F2[k].get(zero, 0) if k < len(F2) else 0 for k in range(N + 1)]
        if again != counts:
            raise SeriesConsistencyError("constant terms not stabilized")
    return counts


# ---------------------------------------------------------------------------
# cross-check between the two engines (covers the v-form of the equation)

def v_identity_check(m: int, N: int, sample_points) -> bool:
    """Check F(v_1,..,v_{m+1};t) = Ftilde(v_1/v_2,..,v_m/v_{m+1}; v_{m+1} t)
    numerically at the given x-points with v_{m+1}=1 and
    v_j = 1 + x_m + .. + x_j.

    Both engines are computed independently; the x-engine runs with an
    enlarged weight bound so coefficients through t^N are complete. True
    iff every t-coefficient agrees at every point.
    """
    pts = [tuple(Fraction(c) for c in pt) for pt in sample_points]
    for pt in pts:
        if len(pt) != m or any(c == 0 for c in pt):
            raise ValueError(f"invalid sample point {pt}: need m nonzero coords")
    useries = u_series(m, N)
    xseries = x_series(m, N, weight_bound=2 * N + 2)
    for pt in pts:
        # v_j = 1 + x_m + .. + x_j, v_{m+1} = 1; u_j = v_j / v_{j+1}
        v = [None] * (m + 2)
        v[m + 1] = Fraction(1)
        acc = Fraction(1)
        for j in range(m, 0, -1):
            acc += pt[j - 1]
            v[j] = acc
        u = tuple(v[j] / v[j + 1] for j in range(1, m + 1))
        for n in range(N + 1):
            if poly_eval(useries[n], u) != poly_eval(xseries[n], pt):
                return False
    return True


def kernel_transposition_invariant(m: int) -> bool:
    """The kernel factor s*h, expanded, is fixed by every transposition."""
    sh = poly_mul(_s_poly(m), _h_poly(m))
    for a in range(m - 1):
        b = a + 1

        def swap(e):
            e = list(e)
            e[a], e[b] = e[b], e[a]
            return tuple(e)

        if {swap(e): c for e, c in sh.items()} != sh:
            return False
    return True
