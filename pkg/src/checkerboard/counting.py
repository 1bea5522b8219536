"""Exact Jacobian ranks of the family maps, via jet arithmetic.

Two maps are differentiated:

* the full-family map sending the 18 complex parameters (36 real slots)
  to the first two columns of both checkerboard blocks of N*rho
  (28 independent real coordinates); its rank is taken over the reals,
  one column per real slot;
* the fixed-point-subfamily map sending (t, x, y, ten complex) through
  the parameter completion to all 41 independent real Hermitian
  coordinates of N*rho.  Its rank is taken over the complex field with
  one column per parameter variable (13 columns: t, x, y and the
  holomorphic derivative of each complex parameter), which is the
  convention under which the reference value 12 at the distinguished
  point is stated.  The plain 23-real-slot rank is exposed separately
  as ``jacobian_rank_lambda_real_slots`` (it is 15 at that point).

The slot ordering is fixed so Jacobians are bit-reproducible: for the
full family, (re, im) pairs of the letters in alphabetical order; for
the subfamily, t, x, y and then (re, im) pairs of a, b, c, f, j, k, l,
m, p, s.
"""

from __future__ import annotations

from fractions import Fraction

from .family import (
    CheckerParams,
    EVEN_POSITIONS,
    ODD_POSITIONS,
    PARAM_LETTERS,
    StateMatrix,
    build_state,
    outer_sum_entries,
    placed_vectors,
)
from .gaussian import GaussRat
from .jets import jet_complex_var, jet_const, jet_rank, jet_real_var
from .matrices import GMat, rank
from .subfamily import COMPLEX_LETTERS, SubfamilyParams, complete_parameters, derive_full_params

PSI_SLOTS = 36
PSI_COORDS = 28
LAMBDA_SLOTS = 23
LAMBDA_COORDS = 41
LAMBDA_SLOT_ORDER = ("t", "x", "y") + tuple(COMPLEX_LETTERS)


def psi_map(p: CheckerParams) -> tuple:
    """First two columns of the 4x4 and 5x5 blocks of the unnormalized state.

    Works at every parameter point, including all-zero (where the blocks
    vanish), so it is built directly from the outer-product entries.
    """
    entries = outer_sum_entries(placed_vectors(p.as_dict()), GaussRat(0))
    m = GMat.from_rows(entries)
    tall_odd = m.submatrix(ODD_POSITIONS, ODD_POSITIONS[:2])
    tall_even = m.submatrix(EVEN_POSITIONS, EVEN_POSITIONS[:2])
    return tall_odd, tall_even


def _tall_block_coords(entries, positions, width):
    """Independent real coordinates of the first ``width`` columns of a Hermitian block."""
    coords = []
    for d in range(width):
        coords.append(entries[positions[d]][positions[d]].real_part())
    for ri in range(len(positions)):
        for ci in range(min(ri, width)):
            ent = entries[positions[ri]][positions[ci]]
            coords.append(ent.real_part())
            coords.append(ent.imag_part())
    return coords


def _psi_coordinate_jets(p: CheckerParams) -> list:
    values = {}
    for idx, ch in enumerate(PARAM_LETTERS):
        values[ch] = jet_complex_var(getattr(p, ch), 2 * idx, 2 * idx + 1, PSI_SLOTS)
    entries = outer_sum_entries(placed_vectors(values), jet_const(0, PSI_SLOTS))
    coords = _tall_block_coords(entries, ODD_POSITIONS, 2)
    coords += _tall_block_coords(entries, EVEN_POSITIONS, 2)
    assert len(coords) == PSI_COORDS
    return coords


def jacobian_rank_psi(p: CheckerParams) -> int:
    """Exact rank of the 28x36 real Jacobian of the two-column map at ``p``."""
    return jet_rank(_psi_coordinate_jets(p), PSI_SLOTS)


def lambda_map(sp: SubfamilyParams) -> StateMatrix:
    """The fixed-point state reached through the parameter completion."""
    return build_state(derive_full_params(sp))


def _lambda_coordinate_jets(sp: SubfamilyParams) -> list:
    t = jet_real_var(GaussRat(sp.t), 0, LAMBDA_SLOTS)
    x = jet_real_var(GaussRat(sp.x), 1, LAMBDA_SLOTS)
    y = jet_real_var(GaussRat(sp.y), 2, LAMBDA_SLOTS)
    cvars = {}
    for idx, ch in enumerate(COMPLEX_LETTERS):
        cvars[ch] = jet_complex_var(
            getattr(sp, ch), 3 + 2 * idx, 4 + 2 * idx, LAMBDA_SLOTS
        )
    values = complete_parameters(
        t, x, y,
        cvars["a"], cvars["b"], cvars["c"], cvars["f"], cvars["j"],
        cvars["k"], cvars["l"], cvars["m"], cvars["p"], cvars["s"],
    )
    entries = outer_sum_entries(placed_vectors(values), jet_const(0, LAMBDA_SLOTS))
    coords = []
    for d in range(9):
        coords.append(entries[d][d].real_part())
    for r in range(9):
        for c in range(r):
            if (r + c) % 2 == 0:
                coords.append(entries[r][c].real_part())
                coords.append(entries[r][c].imag_part())
    assert len(coords) == LAMBDA_COORDS
    return coords


def jacobian_rank_lambda(sp: SubfamilyParams) -> int:
    """Rank of the subfamily-map Jacobian with one column per parameter variable.

    The 41 real coordinates are differentiated holomorphically in each of
    the ten complex parameters (d/dz = (d/dx - i d/dy)/2) and ordinarily
    in t, x, y, giving a 41x13 matrix whose rank is taken over the
    complex field.  Because the coordinates are real-valued, the
    conjugate derivatives carry no extra information for this rank.
    """
    half = Fraction(1, 2)
    rows = []
    for jet in _lambda_coordinate_jets(sp):
        g = jet.grad
        row = [g[0], g[1], g[2]]
        for idx in range(len(COMPLEX_LETTERS)):
            gx = g[3 + 2 * idx].re
            gy = g[4 + 2 * idx].re
            row.append(GaussRat(gx * half, -gy * half))
        rows.append(row)
    return rank(GMat.from_rows(rows))


def jacobian_rank_lambda_real_slots(sp: SubfamilyParams) -> int:
    """Rank over the rationals of the full 41x23 real-slot Jacobian.

    Never smaller than ``jacobian_rank_lambda``; the two differ when the
    map is not holomorphic in the complex parameters, which is the
    generic situation here.
    """
    return jet_rank(_lambda_coordinate_jets(sp), LAMBDA_SLOTS)
