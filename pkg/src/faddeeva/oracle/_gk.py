"""Vectorised adaptive Gauss-Kronrod (10/21) quadrature.

Many independent integrals are refined at once: every point owns its own list
of panels, but all panels of all points are evaluated in a single batch per
refinement round.  Error estimates follow QUADPACK's ``qk21`` heuristics.
"""
import numpy as np

from ..errors import OracleError

# QUADPACK qk21 abscissae/weights on [-1, 1]; the Gauss points are XK[1::2].
_XK_POS = np.array([
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0,
])
_WK_POS = np.array([
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077500309643761, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
])
_WG_POS = np.array([
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
])

XK = np.concatenate([-_XK_POS[:-1], _XK_POS[::-1]])
WK = np.concatenate([_WK_POS[:-1], _WK_POS[::-1]])
GAUSS_IDX = np.array([1, 3, 5, 7, 9, 11, 13, 15, 17, 19])
WG = np.concatenate([_WG_POS, _WG_POS[::-1]])

_EPS = np.finfo(float).eps
_TINY = 1e-300


def _rule(func, owner, a, b):
    half = 0.5 * (b - a)
    mid = 0.5 * (b + a)
    t = mid[:, None] + half[:, None] * XK[None, :]
    f = np.asarray(func(t, owner))  # (ncomp, m, 21)
    res_k = f @ WK
    res_g = f[..., GAUSS_IDX] @ WG
    res_abs = np.abs(f) @ WK
    mean = res_k / 2.0
    res_asc = np.abs(f - mean[..., None]) @ WK
    val = res_k * half
    err = np.abs((res_k - res_g) * half)
    res_abs = res_abs * np.abs(half)
    res_asc = res_asc * np.abs(half)
    with np.errstate(divide="ignore", invalid="ignore"):
        scaled = res_asc * np.minimum(1.0, (200.0 * err / res_asc) ** 1.5)
    err = np.where((res_asc != 0) & (err != 0), scaled, err)
    floor = _EPS * res_abs
    return val, np.maximum(err, floor), floor


def integrate(func, breaks, *, abs_tol, rel_tol, max_rounds=60, max_panels=4000):
    """Integrate ``func`` independently for every point.

    ``func(t, owner)`` receives nodes ``t`` of shape ``(m, 21)`` and the point
    index ``owner`` of each row, and returns an array ``(ncomp, m, 21)``.
    ``breaks`` is an ``(npts, k)`` array of non-decreasing breakpoints; the
    first and last columns are the limits and NaN entries are ignored.

    A point is done when each component's error estimate is at most
    ``max(min(abs_tol, rel_tol*|I|), 1e-300)``, or ``abs_tol`` when
    ``rel_tol`` is None.  Returns ``(value, error)``,
    both of shape ``(ncomp, npts)``.  Raises :class:`OracleError` with the
    offending point index when the refinement budget runs out.
    """
    breaks = np.asarray(breaks, dtype=float)
    npts = breaks.shape[0]
    lo_list, hi_list, own_list = [], [], []
    for j in range(breaks.shape[1] - 1):
        a, b = breaks[:, j], breaks[:, j + 1]
        ok = np.isfinite(a) & np.isfinite(b) & (b > a)
        lo_list.append(a[ok])
        hi_list.append(b[ok])
        own_list.append(np.nonzero(ok)[0])
    owner = np.concatenate(own_list)
    order = np.argsort(owner, kind="stable")
    owner = owner[order]
    a = np.concatenate(lo_list)[order]
    b = np.concatenate(hi_list)[order]

    val, err, floor = _rule(func, owner, a, b)
    ncomp = val.shape[0]
    done = np.zeros(npts, dtype=bool)
    total_val = np.zeros((ncomp, npts))
    total_err = np.zeros((ncomp, npts))

    for _ in range(max_rounds):
        totals = np.stack([np.bincount(owner, val[c], minlength=npts) for c in range(ncomp)])
        errs = np.stack([np.bincount(owner, err[c], minlength=npts) for c in range(ncomp)])
        if rel_tol is None:
            target = np.full(totals.shape, float(abs_tol))
        else:
            target = np.maximum(np.minimum(abs_tol, rel_tol * np.abs(totals)), _TINY)
        point_done = np.all(errs <= target, axis=0)

        newly = point_done & ~done
        total_val[:, newly] = totals[:, newly]
        total_err[:, newly] = errs[:, newly]
        done |= point_done
        if done.all():
            return total_val, total_err

        counts = np.bincount(owner, minlength=npts)
        live = ~done[owner]
        score = np.max(err / target[:, owner], axis=0) * counts[owner]
        splittable = np.any(err > floor * (1 + 1e-12), axis=0)
        split = live & splittable & (score > 1.0)

        stuck = ~done & (np.bincount(owner, split, minlength=npts) == 0)
        too_big = ~done & (counts > max_panels)
        if np.any(stuck | too_big):
            bad = int(np.nonzero(stuck | too_big)[0][0])
            raise OracleError(f"quadrature failed to converge for point index {bad}: "
                              f"error {errs[:, bad]} above target {target[:, bad]}", index=bad)

        keep = ~split & live
        mid = 0.5 * (a[split] + b[split])
        new_owner = np.concatenate([owner[split], owner[split]])
        new_a = np.concatenate([a[split], mid])
        new_b = np.concatenate([mid, b[split]])
        nv, ne, nf = _rule(func, new_owner, new_a, new_b)

        owner = np.concatenate([owner[keep], new_owner])
        a = np.concatenate([a[keep], new_a])
        b = np.concatenate([b[keep], new_b])
        val = np.concatenate([val[:, keep], nv], axis=1)
        err = np.concatenate([err[:, keep], ne], axis=1)
        floor = np.concatenate([floor[:, keep], nf], axis=1)
        srt = np.argsort(owner, kind="stable")
        owner, a, b = owner[srt], a[srt], b[srt]
        val, err, floor = val[:, srt], err[:, srt], floor[:, srt]

    bad = int(np.nonzero(~done)[0][0])
    raise OracleError(f"quadrature exceeded {max_rounds} refinement rounds at point index {bad}",
                      index=bad)
