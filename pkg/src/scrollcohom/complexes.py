"""Monomial complexes of line bundles and their hypercohomology.

The exact sequences used downstream (the dual relative Euler sequence, its
exterior powers, the two resolutions of Omega^i by sums of line bundles,
and the pullbacks of Koszul complexes from the base) all have differentials
whose entries are signed monomials in the total coordinate ring.  Such a
complex decomposes as a direct sum over torus characters, and per character
the Cech complex of the affine chart cover U_{ij} = {x_i != 0, y_j != 0}
is finite dimensional.  Hypercohomology is computed per character class by
exact integer rank computation on the total complex, then summed.

Conventions fixed here:

* Exponent vectors have length (m+1)+(n+1), base exponents first.
* Every summand carries a divisor representative, an exponent vector whose
  class equals the summand's class.  A differential entry is admissible
  only if its monomial equals the target representative minus the source
  representative, which is what makes the decomposition by characters
  valid: entries of equal class but different monomials (x_0 vs x_1, say)
  would otherwise be conflated.
* Subset-indexed terms use representatives -sum_{i in I} e_{y_i} plus a
  fixed shift per builder, so contraction entries y_i match representative
  differences on the nose.
* The chart cover is the product of the base and fiber covers; per summand
  and character the Cech complex is the tensor product of the two sign
  complexes, with membership of the (S, T) component decided by
  nonnegativity of the exponents outside S and T.
* Total differential: the term-to-term map plus (-1)^position times the
  Cech differential.  d o d = 0 is asserted on every newly assembled
  complex shape.

A character class that contributes no cohomology to any single summand has
exact columns, hence contributes nothing to the total complex; only classes
with at least one contributing character are assembled.  The test suite
spot-checks this on excluded classes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .characters import enumerate_contributing, valid_rows
from .cohomology import zero_table
from .linalg import rank_int
from .scroll import DivClass, Scroll


@dataclass(frozen=True)
class Summand:
    cls: DivClass
    rep: tuple[int, ...]


@dataclass(frozen=True)
class MonomialComplex:
    """A bounded complex of sums of line bundles with signed monomial maps.

    terms[k] maps to terms[k+1]; term k sits in cohomological degree
    start_pos + k.  diffs[k] is a tuple of entries
    (src_index, tgt_index, sign, exponent_vector).
    """

    x: Scroll
    start_pos: int
    terms: tuple[tuple[Summand, ...], ...]
    diffs: tuple[tuple[tuple[int, int, int, tuple[int, ...]], ...], ...] = field(default=())

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(self.start_pos + k for k in range(len(self.terms)))

    def twist(self, t: DivClass) -> "MonomialComplex":
        shift = rep_for_class(self.x, t)
        new_terms = tuple(
            tuple(Summand(s.cls + t, tuple(r + d for r, d in zip(s.rep, shift))) for s in term)
            for term in self.terms
        )
        return MonomialComplex(self.x, self.start_pos, new_terms, self.diffs)

    def shape_key(self) -> tuple:
        """Everything the per-character matrices depend on; twisting a
        complex does not change its shape."""
        return (
            self.x.m,
            self.x.n,
            self.start_pos,
            tuple(len(t) for t in self.terms),
            self.diffs,
        )

    def to_json(self) -> dict:
        """Debug dump: terms with classes and representatives, entries with
        signs and monomial exponents."""
        return {
            "scroll": self.x.to_json(),
            "positions": list(self.positions),
            "terms": [[{"class": s.cls.to_json(), "rep": list(s.rep)} for s in term]
                      for term in self.terms],
            "diffs": [[{"src": src, "tgt": tgt, "sign": sign, "monomial": list(expo)}
                       for src, tgt, sign, expo in entries]
                      for entries in self.diffs],
        }


def expo_class(x: Scroll, expo: tuple[int, ...]) -> DivClass:
    """Class of the monomial with the given exponent vector."""
    alpha = expo[: x.m + 1]
    beta = expo[x.m + 1:]
    return DivClass(sum(beta), sum(alpha) - sum(aj * bj for aj, bj in zip(x.a, beta)))


def _unit(x: Scroll, idx: int) -> tuple[int, ...]:
    vec = [0] * (x.m + 1 + x.n + 1)
    vec[idx] = 1
    return tuple(vec)


def _x_unit(x: Scroll, i: int) -> tuple[int, ...]:
    return _unit(x, i)


def _y_unit(x: Scroll, j: int) -> tuple[int, ...]:
    return _unit(x, x.m + 1 + j)


def _vadd(*vecs):
    return tuple(sum(parts) for parts in zip(*vecs))


def rep_for_class(x: Scroll, d: DivClass) -> tuple[int, ...]:
    """Canonical representative p*(D_{y_0} + a_0 D_{x_0}) + q*D_{x_0}."""
    vec = [0] * (x.m + 1 + x.n + 1)
    vec[0] = d.p * x.a[0] + d.q
    vec[x.m + 1] = d.p
    return tuple(vec)


def single_term_complex(x: Scroll, d: DivClass) -> MonomialComplex:
    return MonomialComplex(x, 0, ((Summand(d, rep_for_class(x, d)),),))


def _contraction_sign(elt: int, subset: tuple[int, ...]) -> int:
    return -1 if subset.index(elt) % 2 else 1


def _subset_terms(x: Scroll, sizes: list[int], h_shift: bool) -> tuple[tuple, tuple]:
    """Terms indexed by subsets I of {0..n} of the given sizes (listed in
    map order, so consecutive sizes differ by -1), with contraction
    differentials e_I -> sum +- y_i e_{I - i}.  With h_shift the classes are
    <1-|I|, a_I> (exterior powers of the Euler term twisted back by H),
    otherwise <-|I|, a_I>."""
    nvars = x.m + x.n + 2
    base = [0] * nvars
    if h_shift:
        base[x.m + 1] += 1
        base[0] += x.a[0]
    p_off = 1 if h_shift else 0
    terms = []
    index_of = []
    for size in sizes:
        subsets = list(itertools.combinations(range(x.n + 1), size))
        index_of.append({s: k for k, s in enumerate(subsets)})
        row = []
        for sub in subsets:
            a_i = sum(x.a[i] for i in sub)
            rep = list(base)
            for i in sub:
                rep[x.m + 1 + i] -= 1
            row.append(Summand(DivClass(p_off - size, a_i), tuple(rep)))
        terms.append(tuple(row))
    diffs = []
    for k in range(len(sizes) - 1):
        assert sizes[k + 1] == sizes[k] - 1
        entries = []
        for sub, src in index_of[k].items():
            for i in sub:
                smaller = tuple(s for s in sub if s != i)
                entries.append((src, index_of[k + 1][smaller], _contraction_sign(i, sub), _y_unit(x, i)))
        diffs.append(tuple(entries))
    return tuple(terms), tuple(diffs)


def euler_complex(x: Scroll) -> MonomialComplex:
    """The right half of the dual relative Euler sequence,
    (+) O(a_i F) -> O(H); its hypercohomology is H^*(Omega^1(H))."""
    if x.n < 1:
        raise ValueError("the Euler presentation needs fiber dimension >= 1")
    terms, diffs = _subset_terms(x, [1, 0], h_shift=True)
    return MonomialComplex(x, 0, terms, diffs)


def exterior_complex(x: Scroll) -> MonomialComplex:
    """The full exterior power sequence O<-n,c> -> ... -> B -> O(H); exact."""
    if x.n < 1:
        raise ValueError("needs fiber dimension >= 1")
    terms, diffs = _subset_terms(x, list(range(x.n + 1, -1, -1)), h_shift=True)
    return MonomialComplex(x, 0, terms, diffs)


def cotangent_resolution_left(x: Scroll, i: int) -> MonomialComplex:
    """O<-(n+1),c> -> ... -> (+)_{|I|=i+1} O<-(i+1),a_I>, exact onto Omega^i.

    Placed in degrees -(n-i)..0, so hypercohomology computes H^*(Omega^i).
    """
    _check_omega_index(x, i)
    terms, diffs = _subset_terms(x, list(range(x.n + 1, i, -1)), h_shift=False)
    return MonomialComplex(x, -(x.n - i), terms, diffs)


def cotangent_resolution_right(x: Scroll, i: int) -> MonomialComplex:
    """(+)_{|I|=i} O<-i,a_I> -> ... -> O, exact under Omega^i.

    Placed in degrees 0..i, so hypercohomology computes H^*(Omega^i).
    """
    _check_omega_index(x, i)
    terms, diffs = _subset_terms(x, list(range(i, -1, -1)), h_shift=False)
    return MonomialComplex(x, 0, terms, diffs)


def _check_omega_index(x: Scroll, i: int):
    if not 0 <= i <= x.n:
        raise ValueError(f"cotangent power index {i} out of range 0..{x.n}")


def koszul_pullback(x: Scroll) -> MonomialComplex:
    """Pullback of the Koszul complex of the base coordinates twisted by
    O(F): O(-mF) -> ... -> O^{m+1} -> O(F).  Exact."""
    sizes = list(range(x.m + 1, -1, -1))
    nvars = x.m + x.n + 2
    terms = []
    index_of = []
    for size in sizes:
        subsets = list(itertools.combinations(range(x.m + 1), size))
        index_of.append({s: k for k, s in enumerate(subsets)})
        row = []
        for sub in subsets:
            rep = [0] * nvars
            rep[0] += 1
            for i in sub:
                rep[i] -= 1
            row.append(Summand(DivClass(0, 1 - size), tuple(rep)))
        terms.append(tuple(row))
    diffs = []
    for k in range(len(sizes) - 1):
        entries = []
        for sub, src in index_of[k].items():
            for i in sub:
                smaller = tuple(s for s in sub if s != i)
                entries.append((src, index_of[k + 1][smaller], _contraction_sign(i, sub), _x_unit(x, i)))
        diffs.append(tuple(entries))
    return MonomialComplex(x, 0, tuple(terms), tuple(diffs))


def koszul_pullback_spliced(x: Scroll) -> MonomialComplex:
    """The base Koszul resolution of O<-n,c> spliced into the exterior power
    sequence: O<-n,c-m-1> -> ... -> O^{e_1}<-n,c-1> -> (+)_{|I|=n} O<1-n,a_I>
    -> ... -> B -> O(H).  Exact."""
    if x.n < 1:
        raise ValueError("needs fiber dimension >= 1")
    full = tuple(range(x.n + 1))
    nvars = x.m + x.n + 2
    # representative of class <-n, c-1>: (a_0 - 1) D_{x_0} - sum_{j>=1} D_{y_j}
    base2 = [0] * nvars
    base2[0] = x.a[0] - 1
    for j in range(1, x.n + 1):
        base2[x.m + 1 + j] -= 1
    terms = []
    index_of = []
    k_sizes = list(range(x.m + 1, 0, -1))
    for size in k_sizes:
        subsets = list(itertools.combinations(range(x.m + 1), size))
        index_of.append({s: k for k, s in enumerate(subsets)})
        row = []
        for sub in subsets:
            rep = list(base2)
            rep[0] += 1
            for i in sub:
                rep[i] -= 1
            row.append(Summand(DivClass(-x.n, x.c - size), tuple(rep)))
        terms.append(tuple(row))
    diffs = []
    for k in range(len(k_sizes) - 1):
        entries = []
        for sub, src in index_of[k].items():
            for i in sub:
                smaller = tuple(s for s in sub if s != i)
                entries.append((src, index_of[k + 1][smaller], _contraction_sign(i, sub), _x_unit(x, i)))
        diffs.append(tuple(entries))
    # exterior part, sizes n down to 0
    ext_terms, ext_diffs = _subset_terms(x, list(range(x.n, -1, -1)), h_shift=True)
    ext_index = {s: k for k, s in enumerate(itertools.combinations(full, x.n))}
    splice = []
    for (l,), src in index_of[-1].items():
        for i in full:
            smaller = tuple(s for s in full if s != i)
            sign = _contraction_sign(i, full)
            splice.append((src, ext_index[smaller], sign, _vadd(_x_unit(x, l), _y_unit(x, i))))
    all_terms = tuple(terms) + ext_terms
    all_diffs = tuple(diffs) + (tuple(splice),) + ext_diffs
    return MonomialComplex(x, 0, all_terms, all_diffs)


def validate_complex(c: MonomialComplex) -> list[str]:
    """Check class/representative/monomial compatibility and d o d = 0.
    Returns a list of violation descriptions; empty means valid."""
    x = c.x
    problems = []
    for term_idx, term in enumerate(c.terms):
        for s_idx, s in enumerate(term):
            if expo_class(x, s.rep) != s.cls:
                problems.append(f"term {term_idx} summand {s_idx}: representative class "
                                f"{expo_class(x, s.rep)} != {s.cls}")
    for k, entries in enumerate(c.diffs):
        src_term, tgt_term = c.terms[k], c.terms[k + 1]
        for src, tgt, sign, expo in entries:
            if sign not in (1, -1):
                problems.append(f"diff {k} entry ({src},{tgt}): sign {sign}")
            if any(e < 0 for e in expo):
                problems.append(f"diff {k} entry ({src},{tgt}): negative exponent {expo}")
            if expo_class(x, expo) != tgt_term[tgt].cls - src_term[src].cls:
                problems.append(f"diff {k} entry ({src},{tgt}): monomial class mismatch")
            if tuple(r - s for r, s in zip(tgt_term[tgt].rep, src_term[src].rep)) != expo:
                problems.append(f"diff {k} entry ({src},{tgt}): representative difference mismatch")
    for k in range(len(c.diffs) - 1):
        acc: dict[tuple[int, int], int] = {}
        first = {}
        for src, tgt, sign, _ in c.diffs[k]:
            first.setdefault(src, []).append((tgt, sign))
        for mid, tgt, sign2, _ in c.diffs[k + 1]:
            for src, pairs in first.items():
                for t1, sign1 in pairs:
                    if t1 == mid:
                        key = (src, tgt)
                        acc[key] = acc.get(key, 0) + sign1 * sign2
        for key, total in acc.items():
            if total != 0:
                problems.append(f"d o d != 0 at terms {k}->{k+2}, summands {key}: {total}")
    return problems


# ---------------------------------------------------------------------------
# per-character hypercohomology

_PROFILE_CACHE: dict[tuple, dict[int, int]] = {}


def _neg_masks(x: Scroll, expo: tuple[int, ...]) -> tuple[int, int]:
    bx = 0
    for i in range(x.m + 1):
        if expo[i] < 0:
            bx |= 1 << i
    by = 0
    for j in range(x.n + 1):
        if expo[x.m + 1 + j] < 0:
            by |= 1 << j
    return bx, by


def _supersets(mask: int, nbits: int) -> list[int]:
    free = [i for i in range(nbits) if not mask & (1 << i)]
    out = []
    for bits in range(1 << len(free)):
        s = mask
        for k, i in enumerate(free):
            if bits & (1 << k):
                s |= 1 << i
        if s:
            out.append(s)
    return out


def _profile_dims(c: MonomialComplex, shape, profile) -> dict[int, int]:
    """Cohomology dimensions of the per-character total complex whose
    summand sign pattern is `profile` (one (negx, negy) mask pair per
    summand, in global order)."""
    x = c.x
    cached = _PROFILE_CACHE.get((shape, profile))
    if cached is not None:
        return cached
    positions = c.positions
    glob = []  # (term_idx, local_idx)
    for v, term in enumerate(c.terms):
        for s_idx in range(len(term)):
            glob.append((v, s_idx))
    basis: dict[int, list[tuple[int, int, int]]] = {}
    index: dict[tuple[int, int, int], int] = {}
    for g, (v, _) in enumerate(glob):
        bx, by = profile[g]
        for smask in _supersets(bx, x.m + 1):
            for tmask in _supersets(by, x.n + 1):
                deg = positions[v] + smask.bit_count() + tmask.bit_count() - 2
                index[(g, smask, tmask)] = len(basis.setdefault(deg, []))
                basis[deg].append((g, smask, tmask))
    local_of = {}
    glob_of = {}
    for g, (v, s_idx) in enumerate(glob):
        local_of[g] = (v, s_idx)
        glob_of[(v, s_idx)] = g
    diff_by_src: list[dict[int, list[tuple[int, int]]]] = []
    for entries in c.diffs:
        m: dict[int, list[tuple[int, int]]] = {}
        for src, tgt, sign, _ in entries:
            m.setdefault(src, []).append((tgt, sign))
        diff_by_src.append(m)

    matrices: dict[int, list[dict[int, int]]] = {}
    for deg, elts in basis.items():
        rows = []
        for g, smask, tmask in elts:
            v, s_idx = local_of[g]
            row: dict[int, int] = {}
            if v < len(c.diffs):
                for tgt, sign in diff_by_src[v].get(s_idx, ()):  # term map
                    col = index[(glob_of[(v + 1, tgt)], smask, tmask)]
                    row[col] = row.get(col, 0) + sign
            pref = -1 if positions[v] % 2 else 1
            for i in range(x.m + 1):
                bit = 1 << i
                if not smask & bit:
                    new = smask | bit
                    sgn = -1 if (new & (bit - 1)).bit_count() % 2 else 1
                    col = index[(g, new, tmask)]
                    row[col] = row.get(col, 0) + pref * sgn
            fib_pref = pref * (-1 if (smask.bit_count() - 1) % 2 else 1)
            for j in range(x.n + 1):
                bit = 1 << j
                if not tmask & bit:
                    new = tmask | bit
                    sgn = -1 if (new & (bit - 1)).bit_count() % 2 else 1
                    col = index[(g, smask, new)]
                    row[col] = row.get(col, 0) + fib_pref * sgn
            rows.append(row)
        matrices[deg] = rows
    # total differential squares to zero on this shape
    for deg in sorted(matrices):
        nxt = matrices.get(deg + 1)
        if not nxt:
            continue
        for row in matrices[deg]:
            acc: dict[int, int] = {}
            for mid, c1 in row.items():
                for tgt, c2 in nxt[mid].items():
                    acc[tgt] = acc.get(tgt, 0) + c1 * c2
            assert all(v == 0 for v in acc.values()), "total differential does not square to zero"
    ranks = {deg: rank_int(rows) for deg, rows in matrices.items()}
    dims = {}
    for deg, elts in basis.items():
        h = len(elts) - ranks.get(deg, 0) - ranks.get(deg - 1, 0)
        if h:
            dims[deg] = h
    _PROFILE_CACHE[(shape, profile)] = dims
    return dims


def _contributing_keys(c: MonomialComplex) -> set[tuple[int, ...]]:
    x = c.x
    keys = set()
    for term in c.terms:
        for s in term:
            for row in valid_rows(x):
                for ch in enumerate_contributing(x, s.cls, row):
                    expo = ch.alpha + ch.beta
                    keys.add(tuple(e - r for e, r in zip(expo, s.rep)))
    return keys


def _key_profile(c: MonomialComplex, key: tuple[int, ...]):
    x = c.x
    prof = []
    for term in c.terms:
        for s in term:
            expo = tuple(k + r for k, r in zip(key, s.rep))
            prof.append(_neg_masks(x, expo))
    return tuple(prof)


def per_key_dims(c: MonomialComplex, key: tuple[int, ...]) -> dict[int, int]:
    """Hypercohomology contribution of a single character class (testing hook)."""
    return _profile_dims(c, c.shape_key(), _key_profile(c, key))


def hypercohom(x: Scroll, c: MonomialComplex) -> tuple[int, ...]:
    """Total hypercohomology table of a monomial complex, degrees 0..n+m.

    Raises if the complex has cohomology outside that range (the built
    complexes never do: they are either exact or quasi-isomorphic to a
    sheaf placed in degree zero).
    """
    if c.x != x:
        raise ValueError("complex was built on a different scroll")
    shape = c.shape_key()
    totals: dict[int, int] = {}
    for key in sorted(_contributing_keys(c)):
        for deg, h in _profile_dims(c, shape, _key_profile(c, key)).items():
            totals[deg] = totals.get(deg, 0) + h
    table = list(zero_table(x))
    for deg, h in totals.items():
        if h and not 0 <= deg <= x.dim:
            raise ValueError(f"hypercohomology in unexpected degree {deg}")
        table[deg] = h
    return tuple(table)


def omega_cohom(x: Scroll, i: int, t: DivClass, route: str = "both") -> tuple[int, ...]:
    """Cohomology table of Omega^i(T), the i-th exterior power of the
    relative cotangent bundle twisted by T.

    Two independent resolutions are available; by default both are run and
    must agree.  Omega^0 is the structure sheaf.
    """
    _check_omega_index(x, i)
    if route not in ("left", "right", "both"):
        raise ValueError(f"route must be left, right or both, not {route!r}")
    from .cohomology import line_cohom

    tables = {}
    if route in ("left", "both"):
        tables["left"] = hypercohom(x, cotangent_resolution_left(x, i).twist(t))
    if route in ("right", "both"):
        tables["right"] = line_cohom(x, t) if i == 0 else hypercohom(x, cotangent_resolution_right(x, i).twist(t))
    if route == "both" and tables["left"] != tables["right"]:
        raise AssertionError(
            f"resolution routes disagree for Omega^{i}({t.p},{t.q}) on {x}: "
            f"{tables['left']} vs {tables['right']}")
    return tables["left"] if "left" in tables else tables["right"]
