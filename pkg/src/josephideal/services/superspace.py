"""Weights, roots, ρ, the form on h* and Casimir eigenvalues for sl(m|n)."""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Tuple

from ..exceptions import IsotropicRootError, NonIntegralWeightError, WeightError
from ..models.supermatrix import check_case
from ..models.weight import RootSystem, Weight, weight_sum

logger = logging.getLogger(__name__)


Coords = Tuple[Fraction, ...]


def epsilon(m: int, n: int, i: int) -> Coords:
    """Coordinate vector of ε_i (1-based). Not a weight of sl(m|n) on its own."""
    if not 1 <= i <= m:
        raise WeightError(f"ε_{i} does not exist for m = {m}")
    return tuple(Fraction(int(k == i - 1)) for k in range(m + n))


def delta(m: int, n: int, j: int) -> Coords:
    """Coordinate vector of δ_j (1-based). Not a weight of sl(m|n) on its own."""
    if not 1 <= j <= n:
        raise WeightError(f"δ_{j} does not exist for n = {n}")
    return tuple(Fraction(int(k == m + j - 1)) for k in range(m + n))


def _coordinate(m: int, n: int, i: int) -> Coords:
    return epsilon(m, n, i + 1) if i < m else delta(m, n, i - m + 1)


def unit_root(m: int, n: int, i: int, j: int) -> Weight:
    """Weight of E_ij (0-based indices): coordinate i minus coordinate j."""
    a, b = _coordinate(m, n, i), _coordinate(m, n, j)
    return Weight(m, n, tuple(x - y for x, y in zip(a, b)))


def labelled(m: int, n: int, eps: Mapping[int, int] = None, dlt: Mapping[int, int] = None) -> Weight:
    """Weight from a formula written for generic (m, n).

    For n = 1 the index δ_{n-1} (= δ_0) stands for ε_m; for m = 1, ε_2 stands for δ_1.
    """
    eps = dict(eps or {})
    dlt = dict(dlt or {})
    if n == 1 and 0 in dlt:
        eps[m] = eps.get(m, 0) + dlt.pop(0)
    if m == 1 and 2 in eps:
        dlt[1] = dlt.get(1, 0) + eps.pop(2)
    return Weight.combination(m, n, eps=eps, dlt=dlt)


@lru_cache(maxsize=None)
def root_system(m: int, n: int) -> RootSystem:
    check_case(m, n, allow_equal=True)
    even = [unit_root(m, n, i, j) for i in range(m) for j in range(i + 1, m)]
    even += [unit_root(m, n, m + i, m + j) for i in range(n) for j in range(i + 1, n)]
    odd = [unit_root(m, n, i, m + j) for i in range(m) for j in range(n)]
    return RootSystem(m, n, tuple(even), tuple(odd), simple_roots(m, n))


def simple_roots(m: int, n: int) -> Tuple[Weight, ...]:
    return tuple(unit_root(m, n, k, k + 1) for k in range(m + n - 1))


def rho(m: int, n: int) -> Weight:
    """ρ with ε_i-coefficient (m−n−2i+1)/2 and δ_j-coefficient (n+m−2j+1)/2."""
    check_case(m, n)
    eps = [Fraction(m - n - 2 * i + 1, 2) for i in range(1, m + 1)]
    dlt = [Fraction(n + m - 2 * j + 1, 2) for j in range(1, n + 1)]
    return Weight(m, n, tuple(eps + dlt))


def rho_from_roots(m: int, n: int) -> Weight:
    """Half the even positive roots minus half the odd positive roots."""
    roots = root_system(m, n)
    even = weight_sum(roots.even_positive, m, n)
    odd = weight_sum(roots.odd_positive, m, n)
    return (even - odd) * Fraction(1, 2)


def form_eval(lam: Weight, mu: Weight) -> Fraction:
    """(λ, μ) with (ε_i, ε_j) = δ_ij, (δ_j, δ_k) = −δ_jk and (ε_i, δ_j) = 0."""
    if (lam.m, lam.n) != (mu.m, mu.n):
        raise WeightError("weights of different algebras cannot be paired")
    m = lam.m
    even = sum((a * b for a, b in zip(lam.coords[:m], mu.coords[:m])), Fraction(0))
    odd = sum((a * b for a, b in zip(lam.coords[m:], mu.coords[m:])), Fraction(0))
    return even - odd


def casimir_eigenvalue(lam: Weight) -> Fraction:
    """(λ+2ρ, λ), the scalar by which the Casimir acts on a highest weight vector."""
    return form_eval(lam + rho(lam.m, lam.n) * 2, lam)


def lambda_k(k: int, m: int, n: int) -> Weight:
    """Highest weight occurring in the k-th symmetric power of g."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if k <= n:
        return Weight.combination(m, n, eps={1: k}, dlt={j: -1 for j in range(n - k + 1, n + 1)})
    eps = {1: k}
    eps[m] = eps.get(m, 0) - (k - n)
    return Weight.combination(m, n, eps=eps, dlt={j: -1 for j in range(1, n + 1)})


def coroot(alpha: Weight) -> Weight:
    """α∨ = 2α/(α, α); undefined for isotropic (odd) roots."""
    norm = form_eval(alpha, alpha)
    if norm == 0:
        raise IsotropicRootError(f"{alpha.label()} is isotropic and has no coroot")
    return alpha * (Fraction(2) / norm)


def dominance_pairings(lam: Weight) -> Dict[str, Fraction]:
    """(λ+ρ, α∨) for every even positive root α."""
    shifted = lam + rho(lam.m, lam.n)
    return {
        alpha.label(): form_eval(shifted, coroot(alpha))
        for alpha in root_system(lam.m, lam.n).even_positive
    }


def is_dominant_regular(lam: Weight) -> bool:
    """True iff (λ+ρ, α∨) > 0 for all even positive α.

    Raises :class:`NonIntegralWeightError` when some pairing is not an integer.
    """
    pairings = dominance_pairings(lam)
    bad = [name for name, v in pairings.items() if v.denominator != 1]
    if bad:
        raise NonIntegralWeightError(f"{lam.label()} pairs non-integrally with {', '.join(bad)}")
    return all(v > 0 for v in pairings.values())


def tensor_square_weights(m: int, n: int) -> Dict[str, List[Weight]]:
    """Highest weights of the symmetric and antisymmetric squares of g."""
    check_case(m, n)
    symmetric = [
        labelled(m, n, eps={1: 2}, dlt={n - 1: -1, n: -1}),
        labelled(m, n, eps={1: 1, 2: 1}, dlt={n: -2}),
        labelled(m, n, eps={1: 1}, dlt={n: -1}),
        Weight.zero(m, n),
    ]
    antisymmetric = [
        labelled(m, n, eps={1: 2}, dlt={n: -2}),
        labelled(m, n, eps={1: 1, 2: 1}, dlt={n - 1: -1, n: -1}),
        labelled(m, n, eps={1: 1}, dlt={n: -1}),
    ]
    return {"symmetric": symmetric, "antisymmetric": antisymmetric}


def _add_terms(*terms: Tuple[str, int, int]) -> Tuple[Dict[int, int], Dict[int, int]]:
    eps: Dict[int, int] = {}
    dlt: Dict[int, int] = {}
    for kind, index, coeff in terms:
        target = eps if kind == "e" else dlt
        target[index] = target.get(index, 0) + coeff
    return eps, dlt


def excluded_weights(m: int, n: int) -> List[Weight]:
    """Weights ruled out as highest weights of g⊗g.

    Entries that coincide with a predicted highest weight after the small-(m, n)
    substitutions are dropped, as are duplicates.
    """
    formulas = [
        _add_terms(("e", 1, 2), ("e", m, -1), ("d", n, -1)),
        _add_terms(("e", 1, 1), ("e", 2, 1), ("e", m, -1), ("d", n, -1)),
        _add_terms(("e", 1, 1), ("e", m, -1)),
        _add_terms(("d", 1, 1), ("d", n, -1)),
        _add_terms(("e", 1, 1), ("d", 1, 1), ("d", n, -2)),
        _add_terms(("e", 1, 1), ("d", 1, 1), ("d", n - 1, -1), ("d", n, -1)),
        _add_terms(("e", 1, 1), ("e", m, -1), ("d", 1, 1), ("d", n, -1)),
    ]
    predicted = [w for ws in tensor_square_weights(m, n).values() for w in ws]
    result: List[Weight] = []
    for eps, dlt in formulas:
        weight = labelled(m, n, eps=eps, dlt=dlt)
        if weight in predicted or weight in result:
            continue
        result.append(weight)
    return result


def casimir_exclusions(m: int, n: int, k_max: int = 4) -> List[Dict[str, object]]:
    """Casimir values ruling out λᵏ+α as a highest weight in the k+1-st Cartan power.

    For each k the entry lists (λᵏ⁺¹+2ρ, λᵏ⁺¹) next to (λᵏ+α+2ρ, λᵏ+α) for α in
    {0, ε₁−δ_n, ε₂−δ_n, ε₁−ε_{m−1} (ε₁−ε_m when k < n), ε₂−ε_m}.
    """
    check_case(m, n)
    rows = []
    for k in range(1, k_max + 1):
        lk = lambda_k(k, m, n)
        target = casimir_eigenvalue(lambda_k(k + 1, m, n))
        last = m - 1 if k >= n else m
        candidates = {
            "0": Weight.zero(m, n),
            "ε1-δn": unit_root(m, n, 0, m + n - 1),
            "ε2-δn": unit_root(m, n, 1, m + n - 1),
            f"ε1-ε{last}": unit_root(m, n, 0, last - 1),
            "ε2-εm": unit_root(m, n, 1, m - 1),
        }
        values = {name: casimir_eigenvalue(lk + alpha) for name, alpha in candidates.items()}
        rows.append(
            {
                "k": k,
                "target": target,
                "values": values,
                "all_differ": all(v != target for v in values.values()),
            }
        )
        logger.debug("casimir exclusions k=%d target=%s values=%s", k, target, values)
    return rows
