"""Explicit coloring constructions, one per closed-form proposition.

Each constructor evaluates the published case formula literally over the
paper's 1-based vertex numbering (see families.Provenance.paper_pos) and
maps the result onto internal vertex ids. Formulas are reproduced as
printed, never repaired: where a formula fails for a parameter value the
verifier reports the violation and callers surface it.

predicted_chi_r dispatches a (family, r) pair to the matching closed form
and returns None outside every stated case.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import families
from .errors import ParameterError, UnsupportedCaseError
from .families import FamilySpec, Provenance, parse_spec
from .graphs import Graph
from .verify import Coloring


@dataclass(frozen=True)
class ClaimedColoring:
    """A constructed coloring plus the proposition's claim about it."""

    graph: Graph
    provenance: Provenance
    coloring: Coloring
    claimed_k: int
    r_values: tuple  # concrete r levels the claim covers
    proposition: int
    case: str

    def paper_color(self, i: int) -> int:
        """Color of the paper's v_i."""
        return self.coloring.colors[self.provenance.internal_of(i)]

    def to_json_dict(self) -> dict:
        d = self.coloring.to_json_dict()
        d.update(
            {
                "proposition": self.proposition,
                "case": self.case,
                "claimed_k": self.claimed_k,
                "r_set": ",".join(str(r) for r in self.r_values),
            }
        )
        return d


def _from_paper_formula(
    g: Graph, prov: Provenance, formula, claimed_k: int, r_values, prop: int, case: str
) -> ClaimedColoring:
    colors = tuple(formula(prov.paper_pos[v]) for v in range(g.n))
    coloring = Coloring(colors, max(max(colors), claimed_k))
    return ClaimedColoring(
        g, prov, coloring, claimed_k, tuple(r_values), prop, case
    )


def chi_windmill(k: int, n: int, r: int) -> tuple[int, ClaimedColoring]:
    """Closed form for Wd(k,n) plus a certified witness coloring.

    The published statement proves existence without exhibiting colorings;
    the witness here colors blades with reused color blocks (small r) or
    walks min{r,Delta} colors around the center (large r).
    """
    if k < 3 or n < 1:
        raise ParameterError(f"need k >= 3 and n >= 1, got ({k},{n})")
    if r < 2:
        raise ParameterError("the case analysis starts at r = 2; use the solver")
    g, prov = families.windmill(k, n)
    delta = n * (k - 1)
    if r <= k - 1:
        value = k
        case = "2<=r<=k-1"
        r_values = range(2, k)
        colors = [1] + [2 + (v - 1) % (k - 1) for v in range(1, g.n)]
    else:
        value = min(r, delta) + 1
        case = "r>=k"
        r_values = (r,)
        # Consecutive color runs of length k-1 around the center tile all
        # of 2..value, so the center sees value-1 distinct colors.
        colors = [1] + [2 + (v - 1) % (value - 1) for v in range(1, g.n)]
    coloring = Coloring(tuple(colors), max(colors))
    claim = ClaimedColoring(g, prov, coloring, value, tuple(r_values), 1, case)
    return value, claim


def color_line_windmill_delta(k: int, n: int) -> ClaimedColoring:
    """L(Wd(k,n)) at r = Delta: z = n(k-1) + C(k-1,2) colors."""
    if k < 3 or n < 1:
        raise ParameterError(f"need k >= 3 and n >= 1, got ({k},{n})")
    g, prov = families.build(f"L(wd:{k},{n})")
    z = n * (k - 1) + comb(k - 1, 2)
    inner = comb(k - 1, 2)

    def formula(i: int) -> int:
        if 1 <= i <= z:
            return i
        return i % inner + n * (k - 1) + 1

    delta = g.max_degree()
    return _from_paper_formula(g, prov, formula, z, (delta,), 2, "r=Delta")


def color_line_friendship(n: int, r: int) -> ClaimedColoring:
    """L(F_n): 2n colors for r < Delta, 2n+1 at r = Delta.

    n = 1 is rejected: the small-r formula's middle range is empty there
    and L(F_1) = K_3 already needs 3 > 2n colors.
    """
    if n < 2:
        raise ParameterError(
            "n >= 2 required: at n = 1 the published small-r formula "
            "degenerates (L(F_1) = K_3 has clique number 3 > 2n)"
        )
    g, prov = families.build(f"L(fr:{n})")
    delta = g.max_degree()
    r = min(r, delta)
    if r < 2:
        raise ParameterError("the case analysis starts at r = 2; use the solver")
    if r == delta:
        inner = color_line_windmill_delta(3, n)
        return ClaimedColoring(
            inner.graph,
            inner.provenance,
            inner.coloring,
            inner.claimed_k,
            (delta,),
            3,
            "r=Delta",
        )

    def formula(i: int) -> int:
        if 1 <= i <= 2 * n:
            return i
        if 2 * n + 1 <= i <= 3 * n - 1:
            return 2 * n
        return 1  # i == 3n

    return _from_paper_formula(
        g, prov, formula, 2 * n, range(2, delta), 3, "r<Delta"
    )


def color_middle_multipartite_delta(sizes: list[int]) -> ClaimedColoring:
    """M(K_{n1..nk}) at r = Delta: k + l colors (l = edge count)."""
    if len(sizes) < 2:
        raise ParameterError("need at least two parts")
    spec = "M(kpart:" + ",".join(str(s) for s in sizes) + ")"
    g, prov = families.build(spec, scheme="middle-multipartite")
    part_sizes = prov.notes["base"]["sizes"]
    k_parts = len(part_sizes)
    l = g.n - sum(part_sizes)
    prefix = [0]
    for s in part_sizes:
        prefix.append(prefix[-1] + s)

    def formula(i: int) -> int:
        if 1 <= i <= l:
            return i
        # p such that 1 + sum_{j<p} n_j <= i - l <= sum_{j<=p} n_j
        t = i - l
        p = next(q for q in range(1, k_parts + 1) if t <= prefix[q])
        return l + p

    delta = g.max_degree()
    return _from_paper_formula(
        g, prov, formula, k_parts + l, (delta,), 4, "r=Delta"
    )


def color_middle_cycle(n: int, r: int) -> ClaimedColoring:
    """M(C_n) for n >= 4: 3 colors at r = 2, 4 colors at r = 3."""
    if n < 4:
        raise ParameterError("stated for n >= 4; use the solver for smaller n")
    if r not in (2, 3):
        raise UnsupportedCaseError(
            f"no closed-form case for r = {r} on M(C_n) (only r in {{2,3}})"
        )
    g, prov = families.build(f"M(cyc:{n})")
    if r == 2:
        if n % 2 == 0:

            def formula(i: int) -> int:
                if 1 <= i <= n:
                    return 1
                if n + 1 <= i <= 2 * n and i % 2 == 1:
                    return 2
                return 3

            case = "r=2,n even"
        else:

            def formula(i: int) -> int:
                if i == 1 or (n + 1 <= i <= 2 * n and i % 2 == 1):
                    return 1
                if i == 2 * n or 2 <= i <= n - 1:
                    return 2
                return 3

            case = "r=2,n odd"
        return _from_paper_formula(g, prov, formula, 3, (2,), 5, case)

    def formula(i: int) -> int:
        if n + 1 <= i <= 2 * n and (i - n) % 2 == 0:
            return 1
        if 1 <= i <= n and i % 2 == 1:
            return 2
        if i == n + 1 or (4 <= i <= n and i % 2 == 0):
            return 3
        return 4

    return _from_paper_formula(g, prov, formula, 4, (3,), 5, "r=3")


def _middle_friendship_case1_formula(n: int):
    def formula(i: int) -> int:
        if 1 <= i <= 2 * n + 1:
            return i
        if i == 2 * n + 2:
            return 3
        if i == 2 * n + 3:
            return 4
        if 2 * n + 4 <= i <= 4 * n + 1:
            return 1 if (i - 2 * n) % 2 == 0 else 2
        return 2 * n + 1  # 4n+2 <= i <= 5n+1

    return formula


def color_middle_friendship(n: int, r: int) -> ClaimedColoring:
    """M(F_n): 2n+1 colors for r <= 2n, 2n+2 at r = 2n+1, 2n+4 at r = Delta.

    All three case formulas are evaluated exactly as published; at n = 1
    the small-r formula's literal constants collide with color 2n+1 = 3
    (the verifier flags this), which is surfaced rather than repaired.
    """
    if n < 1:
        raise ParameterError(f"need n >= 1, got {n}")
    delta = 2 * n + 2
    if r < 1:
        raise ParameterError(f"r must be >= 1, got {r}")
    r = min(r, delta)
    g, prov = families.build(f"M(fr:{n})")
    if r <= 2 * n:
        return _from_paper_formula(
            g,
            prov,
            _middle_friendship_case1_formula(n),
            2 * n + 1,
            range(2, 2 * n + 1),
            6,
            "r<=2n",
        )
    if r == 2 * n + 1:
        case1 = _middle_friendship_case1_formula(n)

        def formula(i: int) -> int:
            return case1(i) if 1 <= i <= 4 * n + 1 else 2 * n + 2

        return _from_paper_formula(
            g, prov, formula, 2 * n + 2, (2 * n + 1,), 6, "r=2n+1"
        )

    def formula(i: int) -> int:
        if 1 <= i <= 2 * n + 3:
            return i
        if 2 * n + 4 <= i <= 4 * n + 1 and (i - 2 * n) % 2 == 0:
            return 2 * n + 3
        if i == 4 * n + 2 or (2 * n + 4 <= i <= 4 * n + 1 and (i - 2 * n) % 2 == 1):
            return 2 * n + 4
        return 2 * n + 2  # 4n+3 <= i <= 5n+1

    return _from_paper_formula(g, prov, formula, 2 * n + 4, (delta,), 6, "r=Delta")


def color_middle_bipartite(n1: int, n2: int, r: int) -> ClaimedColoring:
    """M(K_{n1,n2}) with n1 <= n2: n2+1 colors for r <= n2, n2+2 at r = n2+1."""
    if n1 < 1 or n2 < 1:
        raise ParameterError(f"part sizes must be >= 1, got ({n1},{n2})")
    if n1 > n2:
        n1, n2 = n2, n1
    if r < 1:
        raise ParameterError(f"r must be >= 1, got {r}")
    if r > n2 + 1:
        raise UnsupportedCaseError(
            f"no closed-form case for r = {r} > n2+1 on M(K_{{n1,n2}}); "
            "use the solver"
        )
    g, prov = families.build(f"M(kpart:{n1},{n2})")
    n = n1 + n2

    def case1(i: int) -> int:
        if 1 <= i <= n:
            return n2 + 1
        return 1 + ((i - 1 - n) // n2 + (i - n)) % n2

    if r <= n2:
        return _from_paper_formula(
            g, prov, case1, n2 + 1, range(1, n2 + 1), 7, "r<=n2"
        )

    def formula(i: int) -> int:
        return n2 + 2 if 1 <= i <= n1 else case1(i)

    return _from_paper_formula(g, prov, formula, n2 + 2, (n2 + 1,), 7, "r=n2+1")


def _delta_of(spec: FamilySpec) -> int:
    g, _ = families.build(spec)
    return g.max_degree()


def construct(spec: str | FamilySpec, r: int) -> ClaimedColoring:
    """Dispatch (family, r) to the matching proposition's constructor."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if spec.tag in ("wd", "fr"):
        k, n = spec.params if spec.tag == "wd" else (3, spec.params[0])
        return chi_windmill(k, n, r)[1]
    if spec.tag == "L" and spec.inner.tag in ("wd", "fr"):
        inner = spec.inner
        k, n = inner.params if inner.tag == "wd" else (3, inner.params[0])
        delta = _delta_of(spec)
        if min(r, delta) == delta:
            return color_line_windmill_delta(k, n)
        if k == 3:
            return color_line_friendship(n, r)
        raise UnsupportedCaseError(
            "only r = Delta is covered for line graphs of windmills with "
            "k > 3 (nearest case: L(Wd(k,n)) at r = Delta)"
        )
    if spec.tag == "M" and spec.inner.tag == "cyc":
        return color_middle_cycle(spec.inner.params[0], r)
    if spec.tag == "M" and (
        spec.inner.tag == "fr"
        or (spec.inner.tag == "wd" and spec.inner.params[0] == 3)
    ):
        return color_middle_friendship(spec.inner.params[-1], r)
    if spec.tag == "M" and spec.inner.tag == "kpart":
        sizes = sorted(spec.inner.params)
        delta = _delta_of(spec)
        if len(sizes) == 2 and r <= sizes[1] + 1:
            return color_middle_bipartite(sizes[0], sizes[1], r)
        if min(r, delta) == delta:
            return color_middle_multipartite_delta(list(sizes))
        raise UnsupportedCaseError(
            f"no stated case covers r = {r} here (nearest: middle graphs "
            "of complete multipartite graphs at r = Delta)"
        )
    raise UnsupportedCaseError(f"no proposition covers family {spec}")


def predicted_chi_r(spec: str | FamilySpec, r: int) -> int | None:
    """Closed-form chi_r when (family, r) falls inside a stated case.

    Returns None outside every case; never extrapolates. r is capped at
    Delta only for the cases a proposition states in terms of Delta.
    """
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if r < 1:
        return None

    if spec.tag in ("wd", "fr"):
        k, n = spec.params if spec.tag == "wd" else (3, spec.params[0])
        if r < 2:
            return None
        if 2 <= r <= k - 1:
            return k
        if r >= k:
            return min(r, n * (k - 1)) + 1
        return None

    if spec.tag == "L" and spec.inner.tag in ("wd", "fr"):
        inner = spec.inner
        k, n = inner.params if inner.tag == "wd" else (3, inner.params[0])
        delta = _delta_of(spec)
        r = min(r, delta)
        if r == delta:
            return n * (k - 1) + comb(k - 1, 2)
        if k == 3 and n >= 2 and 2 <= r < delta:
            return 2 * n
        return None

    if spec.tag == "M" and spec.inner.tag == "cyc":
        n = spec.inner.params[0]
        if n >= 4 and r in (2, 3):
            return 3 if r == 2 else 4
        return None

    if spec.tag == "M" and (
        spec.inner.tag == "fr"
        or (spec.inner.tag == "wd" and spec.inner.params[0] == 3)
    ):
        n = spec.inner.params[-1]
        delta = 2 * n + 2
        r = min(r, delta)
        if r <= 2 * n:
            return 2 * n + 1
        if r == 2 * n + 1:
            return 2 * n + 2
        return 2 * n + 4  # r = Delta

    if spec.tag == "M" and spec.inner.tag == "kpart":
        sizes = sorted(spec.inner.params)
        k_parts = len(sizes)
        n = sum(sizes)
        l = sum(s * (n - s) for s in sizes) // 2
        if k_parts == 2:
            n2 = sizes[1]
            if r <= n2:
                return n2 + 1
            if r == n2 + 1:
                return n2 + 2
        delta = _delta_of(spec)
        if min(r, delta) == delta:
            return k_parts + l
        return None

    return None
