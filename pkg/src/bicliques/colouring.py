"""Colouring constructions and chromatic decisions for powers of paths and
cycles.

Every public construction re-checks its own output against the closed-form
hyperedge family before returning; a failure there is a bug in this module,
not bad input, and raises AssertionError.

Colour ids are 0 = blue, 1 = red, 2 = green; further ids only appear in the
all-distinct colourings of complete graphs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple

from .graphs import InputError
from .powers import (
    cycle_bicliques,
    cycle_induced_p3s,
    cycle_stars,
    path_bicliques,
)

BLUE, RED, GREEN = 0, 1, 2


@dataclass(frozen=True)
class Colouring:
    """Vertex colouring: colours[v] is the colour id of vertex v.

    Invariant: every id in [0, num_colours) is used at least once.
    """

    colours: tuple[int, ...]
    num_colours: int

    def __post_init__(self):
        used = set(self.colours)
        for c in used:
            if not 0 <= c < self.num_colours:
                raise InputError(
                    f"colour id {c} outside [0, {self.num_colours})")
        if self.colours and used != set(range(self.num_colours)):
            missing = sorted(set(range(self.num_colours)) - used)
            raise InputError(f"colour ids {missing} unused")

    @staticmethod
    def from_sequence(colours) -> "Colouring":
        cs = tuple(colours)
        return Colouring(cs, max(cs) + 1 if cs else 0)

    @property
    def n(self) -> int:
        return len(self.colours)


class EvenDivision(NamedTuple):
    """n = a*k + t with a even, a >= 2, 0 <= t < 2k."""

    a: int
    t: int


@dataclass(frozen=True)
class AbCertificate:
    """Witness that n = a*k + b*(k+1) with a + b even, certifying a
    2-colouring by a size-k blocks and b size-(k+1) blocks."""

    a: int
    b: int

    def is_valid_for(self, n: int, k: int) -> bool:
        return (self.a >= 0 and self.b >= 0
                and self.a * k + self.b * (k + 1) == n
                and (self.a + self.b) % 2 == 0
                and self.a + self.b >= 2)


@dataclass(frozen=True)
class ChromaticResult:
    """Exact chromatic value with an optimal colouring and, when one exists,
    a certificate: an (a, b) block decomposition for 2-colourable cycles, or
    a set of pairwise-adjacent universal vertices forcing the lower bound in
    the dense ranges."""

    value: int
    colouring: Colouring
    ab: AbCertificate | None = None
    universal_witness: tuple[int, ...] | None = None


def even_division(n: int, k: int) -> EvenDivision:
    """The unique (a, t) with n = a*k + t, a even >= 2, 0 <= t < 2k.

    Exactly one even integer lies in (n/k - 2, n/k], which pins a.
    """
    if k < 1:
        raise InputError(f"need k >= 1, got k={k}")
    if n < 2 * k:
        raise InputError(f"even division needs n >= 2k, got n={n}, k={k}")
    q = n // k
    a = q if q % 2 == 0 else q - 1
    return EvenDivision(a, n - a * k)


def ab_certificate(n: int, k: int) -> AbCertificate | None:
    """(a, b) with n = a*k + b*(k+1) and a + b even, or None.

    Only c0 = floor(n/k) and c1 = c0 - 1 can be the total block count with
    every block size in {k, k+1}, so two divisions decide existence; c0 is
    preferred when both qualify.  Requires n >= 2k+2 so that an accepted
    total is at least 2.
    """
    if k < 1:
        raise InputError(f"need k >= 1, got k={k}")
    if n < 2 * k + 2:
        raise InputError(f"block certificate needs n >= 2k+2, got n={n}, k={k}")
    q = n // k
    for c in (q, q - 1):
        b = n - c * k
        if c % 2 == 0 and 0 <= b <= c:
            return AbCertificate(c - b, b)
    return None


def decide_two_vs_three(n: int, k: int) -> tuple[int, AbCertificate | None]:
    """Biclique-chromatic number of C_n^k for n >= 3k+2: 2 with an (a, b)
    certificate when one exists, else 3."""
    if n < 3 * k + 2:
        raise InputError(f"two-vs-three decision needs n >= 3k+2, got n={n}, k={k}")
    cert = ab_certificate(n, k)
    return (2, cert) if cert is not None else (3, None)


def guaranteed_ab_certificate(n: int, k: int) -> AbCertificate:
    """For n >= 2k**2 an (a, b) certificate always exists: with n = a'k + t
    from even_division, a' >= 2k > t, so (a' - t, t) works."""
    if k < 1:
        raise InputError(f"need k >= 1, got k={k}")
    if n < 2 * k * k:
        raise InputError(f"shortcut needs n >= 2k^2, got n={n}, k={k}")
    a_prime, t = even_division(n, k)
    cert = AbCertificate(a_prime - t, t)
    assert cert.is_valid_for(n, k)
    return cert


# ---------------------------------------------------------------------------
# block layout helpers

def _lay_blocks(blocks: list[tuple[int, int]]) -> tuple[int, ...]:
    """Concatenate (colour, size) runs from vertex 0."""
    out: list[int] = []
    for colour, size in blocks:
        out.extend([colour] * size)
    return tuple(out)


def _alternating(count: int, size: int) -> list[tuple[int, int]]:
    """count blocks of the given size, RED, BLUE, RED, ..."""
    return [(RED if i % 2 == 0 else BLUE, size) for i in range(count)]


def _ab_block_colouring(n: int, k: int, cert: AbCertificate) -> Colouring:
    """a size-k blocks then b size-(k+1) blocks, colours alternating from
    RED; a + b even keeps the wrap-around alternation intact."""
    sizes = [k] * cert.a + [k + 1] * cert.b
    blocks = [(RED if i % 2 == 0 else BLUE, s) for i, s in enumerate(sizes)]
    colours = _lay_blocks(blocks)
    assert len(colours) == n
    return Colouring(colours, 2)


def _check_no_mono(colours, families, what: str) -> None:
    for fam in families:
        vs = getattr(fam, "vertices", fam)
        first = colours[vs[0]]
        if all(colours[v] == first for v in vs[1:]):
            raise AssertionError(
                f"construction bug: monochromatic {what} {vs}")


def three_colour_no_mono_p3(n: int, k: int) -> Colouring:
    """A colouring of C_n^k (n >= 2k+2) with at most three colours in which
    no monochromatic triple induces a P3.

    With n = a*k + t from even_division: for t <= k, a alternating red/blue
    size-k blocks then a green t-block.  For k < t < 2k, a-1 alternating
    size-k blocks (odd count, red at both ends) then green k, blue k,
    green t-k, which restores the block total to n.  The output is validated
    by an exhaustive monochromatic-P3 scan before being returned.
    """
    if k < 1:
        raise InputError(f"need k >= 1, got k={k}")
    if n < 2 * k + 2:
        raise InputError(f"three-colouring needs n >= 2k+2, got n={n}, k={k}")
    a, t = even_division(n, k)
    if t <= k:
        blocks = _alternating(a, k)
        if t:
            blocks.append((GREEN, t))
    else:
        blocks = _alternating(a - 1, k)
        blocks += [(GREEN, k), (BLUE, k), (GREEN, t - k)]
    colours = _lay_blocks(blocks)
    assert len(colours) == n
    _check_no_mono(colours, (t for t, _ in cycle_induced_p3s(n, k)), "P3")
    return Colouring.from_sequence(colours)


# ---------------------------------------------------------------------------
# chromatic constructions

def _complete_result(n: int) -> ChromaticResult:
    colours = tuple(range(n))
    return ChromaticResult(
        value=n,
        colouring=Colouring(colours, n),
        universal_witness=tuple(range(n)),
    )


def biclique_colour_path(n: int, k: int) -> ChromaticResult:
    """Exact biclique-chromatic number of P_n^k with an optimal colouring.

    n <= k+1: K_n, value n.  k+2 <= n <= 2k: value 2k+2-n, forced by the
    2k+2-n pairwise-adjacent universal vertices v_{n-1-k}..v_k; the flanks
    take blue and red and the middle takes fresh colours.  n >= 2k+1:
    value 2 by size-k blocks, the final partial block red iff the count of
    full blocks is even.
    """
    if n < 1 or k < 1:
        raise InputError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    if n <= k + 1:
        result = _complete_result(n)
    elif n <= 2 * k:
        value = 2 * k + 2 - n
        colours = []
        for v in range(n):
            if v < n - k:
                colours.append(BLUE)
            elif v <= k - 1:
                colours.append(GREEN + (v - (n - k)))
            else:
                colours.append(RED)
        result = ChromaticResult(
            value=value,
            colouring=Colouring(tuple(colours), value),
            universal_witness=tuple(range(n - 1 - k, k + 1)),
        )
    else:
        a, t = divmod(n, k)
        blocks = _alternating(a, k)
        if t:
            blocks.append((RED if a % 2 == 0 else BLUE, t))
        colours = _lay_blocks(blocks)
        result = ChromaticResult(value=2, colouring=Colouring(colours, 2))
    _check_no_mono(result.colouring.colours, path_bicliques(n, k), "biclique")
    return result


def biclique_colour_cycle(n: int, k: int) -> ChromaticResult:
    """Exact biclique-chromatic number of C_n^k with an optimal colouring.

    n <= 2k+1: K_n, value n.  2k+2 <= n <= 3k+1: every biclique is a C4 and
    one red size-k block against a blue rest is enough, value 2.  n >= 3k+2:
    value 2 exactly when an (a, b) block decomposition exists, else value 3
    via the no-mono-P3 three-colouring.
    """
    if n < 1 or k < 1:
        raise InputError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    if n <= 2 * k + 1:
        result = _complete_result(n)
    elif n <= 3 * k + 1:
        colours = _lay_blocks([(RED, k), (BLUE, n - k)])
        result = ChromaticResult(value=2, colouring=Colouring(colours, 2))
    else:
        value, cert = decide_two_vs_three(n, k)
        if cert is not None:
            result = ChromaticResult(
                value=2, colouring=_ab_block_colouring(n, k, cert), ab=cert)
        else:
            result = ChromaticResult(
                value=3, colouring=three_colour_no_mono_p3(n, k))
    _check_no_mono(result.colouring.colours, cycle_bicliques(n, k), "biclique")
    return result


def star_colour_path(n: int, k: int) -> ChromaticResult:
    """Exact star-chromatic number of P_n^k.  Path powers are C4-free, so
    stars and bicliques coincide and so do the two chromatic numbers."""
    return biclique_colour_path(n, k)


def star_colour_cycle(n: int, k: int) -> ChromaticResult:
    """Exact star-chromatic number of C_n^k with an optimal colouring.

    n <= 2k+1: K_n, value n.  Otherwise every edge extends to an induced P3,
    so the maximal stars are exactly the induced P3s: value 2 exactly when an
    (a, b) block decomposition exists (blocks of size k and k+1 admit no
    monochromatic P3), else value 3.  This differs from the biclique number
    only in 2k+2 <= n <= 3k+1, where C_11^4 is the standard example with
    biclique number 2 but star number 3.
    """
    if n < 1 or k < 1:
        raise InputError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    if n <= 2 * k + 1:
        result = _complete_result(n)
    else:
        cert = ab_certificate(n, k)
        if cert is not None:
            result = ChromaticResult(
                value=2, colouring=_ab_block_colouring(n, k, cert), ab=cert)
        else:
            result = ChromaticResult(
                value=3, colouring=three_colour_no_mono_p3(n, k))
    _check_no_mono(result.colouring.colours, cycle_stars(n, k), "star")
    return result


# ---------------------------------------------------------------------------
# serialization

def colouring_to_dict(c: Colouring, *, ab: AbCertificate | None = None,
                      universal_witness=None) -> dict:
    d: dict = {
        "n": c.n,
        "colours": list(c.colours),
        "num_colours": c.num_colours,
    }
    if ab is not None:
        d["certificate"] = {"a": ab.a, "b": ab.b}
    if universal_witness is not None:
        d["universal_witness"] = list(universal_witness)
    return d


def colouring_from_dict(d: dict) -> Colouring:
    if not isinstance(d, dict) or "n" not in d or "colours" not in d:
        raise InputError('colouring object needs "n" and "colours" keys')
    colours = d["colours"]
    if not (isinstance(colours, list)
            and all(isinstance(c, int) for c in colours)):
        raise InputError('"colours" must be a list of integers')
    if d["n"] != len(colours):
        raise InputError(
            f'"n" is {d["n"]} but {len(colours)} colours are listed')
    num = d.get("num_colours", (max(colours) + 1) if colours else 0)
    if not isinstance(num, int):
        raise InputError('"num_colours" must be an integer')
    return Colouring(tuple(colours), num)


def read_colouring(path: str) -> Colouring:
    try:
        with open(path) as fh:
            d = json.load(fh)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: line {e.lineno}: {e.msg}") from e
    return colouring_from_dict(d)


def write_colouring(c: Colouring, path: str, *, ab: AbCertificate | None = None,
                    universal_witness=None) -> None:
    with open(path, "w") as fh:
        json.dump(colouring_to_dict(c, ab=ab, universal_witness=universal_witness),
                  fh, indent=1)
        fh.write("\n")
