"""The Burge local rule and its inverse, computed on column heights."""

from __future__ import annotations

from .partitions import Partition, conjugate, is_horizontal_strip, partition


class LocalRuleError(ValueError):
    pass


def _cols(lam, length):
    c = list(conjugate(lam))
    return c + [0] * (length - len(c))


def _from_cols(cols) -> Partition:
    while cols and cols[-1] == 0:
        cols = cols[:-1]
    if any(a < b for a, b in zip(cols, cols[1:])):
        raise LocalRuleError(f"column heights {cols} do not form a partition")
    return conjugate(partition(cols))


def _check_weights(alpha, beta, lam, ell, nu):
    la, a, b, n = sum(lam), sum(alpha), sum(beta), sum(nu)
    if la - a != b - n + ell or la - b != a - n + ell:
        raise AssertionError(
            f"weight conditions fail for alpha={alpha} beta={beta} lambda={lam} ell={ell} nu={nu}")


def burge_down(alpha: Partition, beta: Partition, lam: Partition) -> tuple[int, Partition]:
    """Forward rule ``D_{alpha,beta}(lam) = (ell, nu)``."""
    if not (is_horizontal_strip(lam, alpha) and is_horizontal_strip(lam, beta)):
        raise LocalRuleError(f"{lam} not in U({alpha}) ∩ U({beta})")
    width = len(conjugate(lam))
    lc, ac, bc = _cols(lam, width), _cols(alpha, width), _cols(beta, width)
    A = {c for c in range(1, width + 1) if lc[c - 1] > ac[c - 1]}
    B = {c for c in range(1, width + 1) if lc[c - 1] > bc[c - 1]}
    taken = A | B
    C = set()
    ell = 0
    for i in sorted(A & B, reverse=True):
        delta = i - 1
        while delta in taken:
            delta -= 1
        taken.add(delta)
        if delta > 0:
            C.add(delta)
        else:
            ell += 1
    cols = lc[:]
    for c in A | B | C:
        cols[c - 1] -= 1
    nu = _from_cols(cols)
    _check_weights(alpha, beta, lam, ell, nu)
    return ell, nu


def burge_up(alpha: Partition, beta: Partition, ell: int, nu: Partition) -> Partition:
    """Inverse rule ``U_{alpha,beta}(ell, nu) = lam``."""
    if ell < 0:
        raise LocalRuleError("ell must be non-negative")
    if not (is_horizontal_strip(alpha, nu) and is_horizontal_strip(beta, nu)):
        raise LocalRuleError(f"{nu} not in D({alpha}) ∩ D({beta})")
    width = max(len(conjugate(alpha)), len(conjugate(beta)))
    nc, ac, bc = _cols(nu, width), _cols(alpha, width), _cols(beta, width)
    A = {c for c in range(1, width + 1) if ac[c - 1] > nc[c - 1]}
    B = {c for c in range(1, width + 1) if bc[c - 1] > nc[c - 1]}
    taken = A | B
    for i in sorted(A & B):
        eps = i + 1
        while eps in taken:
            eps += 1
        taken.add(eps)
    D = []
    c = 1
    while len(D) < ell:
        if c not in taken:
            D.append(c)
        c += 1
    grow = taken | set(D)
    cols = nc + [0] * (max(grow, default=0) - width)
    for c in grow:
        cols[c - 1] += 1
    lam = _from_cols(cols)
    _check_weights(alpha, beta, lam, ell, nu)
    return lam
