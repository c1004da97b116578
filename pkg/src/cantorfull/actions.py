"""Orbit actions on Z, the index homomorphism, block stability, and
finite-quotient (LEF) certificates.

The canonical basepoint is always the engine's point_window point; with the
shift convention (phi x)(n) = x(n-1), the cocycle at phi^n(x) reads the
window of x around -n, and j_x(psi)(n) = n + kappa(phi^n x).
"""

import json
from dataclasses import dataclass

from . import caps as caps_mod
from .elements import equal, inverse, make_element
from .errors import (CapExceeded, NotAperiodic, NotInjective, NotSurjective,
                     PartialTable, SemanticError, StabilizerViolated,
                     WindowTooSmall)
from .language import SFTEngine, sft_approximation


@dataclass(frozen=True)
class WindowedPermutation:
    """j_x(psi) restricted to [-window, window]; c bounds |g(n) - n|."""

    window: int
    table: dict
    c: int

    def __call__(self, n):
        return self.table[n]

    def defined_range(self):
        return range(-self.window, self.window + 1)

    def tsv(self):
        lines = ["n\timage"]
        lines += [f"{n}\t{self.table[n]}" for n in self.defined_range()]
        return "\n".join(lines) + "\n"


def orbit_permutation(psi, window, base_shift=0):
    """The permutation n -> n + kappa(phi^{n+base_shift} x) on [-window, window]."""
    r, d = psi.radius, psi.dbound
    if window < r + d:
        raise WindowTooSmall(f"window {window} < radius+dbound = {r + d}")
    point = psi.engine.point_window(window + r + abs(base_shift))
    table = {}
    for n in range(-window, window + 1):
        m = n + base_shift
        table[n] = n + psi.cocycle_at(point, -m)
    if len(set(table.values())) != len(table):
        raise AssertionError("orbit restriction is not injective")
    return WindowedPermutation(window, table, d)


def index_mod(psi, shifts=5):
    """Net transfer of the orbit across the origin; the abelianization onto Z.

    mod(psi) = #{n < 0 : j(n) >= 0} - #{n >= 0 : j(n) < 0}, computed on a
    displacement-sized window and cross-checked at `shifts` shifted basepoints.
    """
    if psi.engine.aperiodic is not True:
        raise NotAperiodic("the index needs an infinite orbit at the basepoint")
    r, d = psi.radius, psi.dbound
    values = []
    for s in range(shifts):
        point = psi.engine.point_window(d + r + shifts)
        left = sum(1 for n in range(-d, 0) if n + psi.cocycle_at(point, -(n + s)) >= 0)
        right = sum(1 for n in range(0, d) if n + psi.cocycle_at(point, -(n + s)) < 0)
        values.append(left - right)
    if len(set(values)) != 1:
        raise AssertionError("index is not basepoint-independent")
    return values[0]


def stabilizer_check(psi, window=None):
    """Window-certified test that j_x(psi) maps N into N and its complement
    into itself (the stabilizer of the positive half-orbit)."""
    r, d = psi.radius, psi.dbound
    if window is None:
        window = 4 * (r + d) if r + d else 4
    perm = orbit_permutation(psi, window)
    c = perm.c
    for n in range(0, window - c + 1):
        if perm(n) < 0:
            return False
    for n in range(-window + c, 0):
        if perm(n) >= 0:
            return False
    return True


def _crossing_witness(perm):
    for n in perm.defined_range():
        if n < 0 <= perm(n) or (n >= 0 and perm(n) < 0):
            return n, perm(n)
    return None


@dataclass(frozen=True)
class PutnamBlocks:
    blocks: tuple            # (start, end) half-open interior blocks
    recurrence_set: tuple
    displacement: int
    invariant: bool

    def tsv(self):
        lines = ["start\tend\tinvariant"]
        lines += [f"{a}\t{b}\t{str(self.invariant).lower()}" for a, b in self.blocks]
        return "\n".join(lines) + "\n"


def putnam_blocks(elements, window):
    """Interval blocks P_n between returns of the coded orbit pattern,
    each invariant under every j_x(f) when all f stabilize the half-orbit.

    The recurrence set is I = {n : tau(n+k) = tau(k) for all f and 0 <= k < m},
    m the maximal displacement; blocks are the gaps between consecutive
    points of I, verified to be permuted within themselves.
    """
    family = []
    seen = set()
    for f in elements:
        for g in (f, inverse(f)):
            key = g.canonical_key()
            if key not in seen:
                seen.add(key)
                family.append(g)
    perms = []
    for f in family:
        if f.radius + f.dbound > window:
            raise WindowTooSmall("window too small for the family's displacements")
        perm = orbit_permutation(f, window)
        if not stabilizer_check(f, window):
            n, image = _crossing_witness(perm)
            raise StabilizerViolated(n, image)
        perms.append(perm)
    m = max((f.dbound for f in family), default=0)
    tau = [{n: p(n) - n for n in p.defined_range()} for p in perms]
    recurrence = []
    for n in range(-window, window - m + 2):
        if all(t[n + k] == t[k] for t in tau for k in range(m)):
            recurrence.append(n)
    if len(recurrence) < 2:
        raise WindowTooSmall("recurrence set too sparse in the window")
    blocks = []
    invariant = True
    for a, b in zip(recurrence, recurrence[1:]):
        if a < -window + m or b > window - m:
            continue
        blocks.append((a, b))
        cells = set(range(a, b))
        for p in perms:
            if {p(n) for n in cells} != cells:
                invariant = False
    if not blocks:
        raise WindowTooSmall("no interior blocks in the window")
    return PutnamBlocks(tuple(blocks), tuple(recurrence), m, invariant)


def block_orbits(elements, block):
    """Orbits of a block of integers under the induced permutations."""
    start, end = block
    window = max(abs(start), abs(end)) + max(f.radius + f.dbound for f in elements)
    perms = [orbit_permutation(f, window) for f in elements] + \
            [orbit_permutation(inverse(f), window) for f in elements]
    parent = {n: n for n in range(start, end)}

    def find(n):
        while parent[n] != n:
            parent[n] = parent[parent[n]]
            n = parent[n]
        return n

    for n in range(start, end):
        for p in perms:
            m = p(n)
            if start <= m < end:
                parent[find(n)] = find(m)
    orbits = {}
    for n in range(start, end):
        orbits.setdefault(find(n), []).append(n)
    return sorted(map(tuple, orbits.values()))


def clopen_orbit(closet, cap=None):
    """Size of the phi-orbit of the clopen set, or None past the cap."""
    cap = cap if cap is not None else caps_mod.DEFAULT.orbit
    seen = {closet.key()}
    current = closet
    for _ in range(cap):
        current = current.shift_image(1).reduced()
        key = current.key()
        if key in seen:
            return len(seen)
        seen.add(key)
    return None


# ---------------------------------------------------------------------------
# LEF certificates via periodic points of SFT approximations


@dataclass(frozen=True)
class FiniteQuotientCert:
    order: int               # approximation order n
    period: int              # period bound p
    points: tuple            # length-p blocks, one per periodic point
    images: tuple            # per element: tuple of point indices
    witnesses: tuple         # (i, j, point index) separating each pair

    def verify(self):
        size = len(self.points)
        for image in self.images:
            if sorted(image) != list(range(size)):
                return False
        for i, j, w in self.witnesses:
            if self.images[i][w] == self.images[j][w]:
                return False
        return True

    def to_json(self):
        return json.dumps({
            "n": self.order,
            "p": self.period,
            "points": ["".join(b) if all(len(c) == 1 for c in b) else ".".join(b)
                       for b in self.points],
            "images": {str(i): list(img) for i, img in enumerate(self.images)},
            "witnesses": [list(w) for w in self.witnesses],
        }, indent=2, sort_keys=True) + "\n"


def _lift_to(approx, element):
    table = {}
    for w in approx.allowed_words(2 * element.radius + 1):
        if w not in element.table:
            raise PartialTable([approx.alphabet.format_word(w)])
        table[w] = element.table[w]
    return make_element(approx, element.radius, table)


def _act_on_block(lift, block):
    p = len(block)
    r = lift.radius
    window = tuple(block[i % p] for i in range(-r, r + 1))
    k = lift.table[window]
    return tuple(block[(i - k) % p] for i in range(p))


def lef_certificate(elements, n_cap=None, p_cap=None):
    """A finite quotient separating the given distinct elements: the least
    approximation order n whose lifts are certified bijective, then the least
    period p whose periodic points separate every pair."""
    caps = caps_mod.DEFAULT
    n_cap = n_cap if n_cap is not None else caps.lef_n
    p_cap = p_cap if p_cap is not None else caps.lef_p
    if not elements:
        raise SemanticError("need at least one element")
    engine = elements[0].engine
    if engine.minimal is not True and not (isinstance(engine, SFTEngine) and engine.is_irreducible()):
        raise SemanticError("certificates need a minimal engine or an irreducible SFT")
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            if equal(elements[i], elements[j]):
                raise SemanticError(f"elements {i} and {j} coincide")
    pairs = [(i, j) for i in range(len(elements)) for j in range(i + 1, len(elements))]
    last_unseparated = pairs[0] if pairs else None
    for n in range(1, n_cap + 1):
        approx = sft_approximation(engine, n)
        try:
            lifts = [_lift_to(approx, f.canonical_element()) for f in elements]
        except (PartialTable, NotInjective, NotSurjective):
            continue
        for p in range(1, p_cap + 1):
            points = approx.periodic_blocks(p)
            if not points:
                continue
            index = {b: t for t, b in enumerate(points)}
            images = []
            valid = True
            for lift in lifts:
                img = tuple(index.get(_act_on_block(lift, b), -1) for b in points)
                if -1 in img or sorted(img) != list(range(len(points))):
                    valid = False
                    break
                images.append(img)
            if not valid:
                continue
            witnesses = []
            separated = True
            for i, j in pairs:
                witness = next((t for t in range(len(points))
                                if images[i][t] != images[j][t]), None)
                if witness is None:
                    separated = False
                    last_unseparated = (i, j)
                    break
                witnesses.append((i, j, witness))
            if separated:
                cert = FiniteQuotientCert(n, p, points, tuple(images), tuple(witnesses))
                if not cert.verify():
                    raise AssertionError("certificate failed re-verification")
                return cert
    raise CapExceeded(f"pair {last_unseparated} not separated within caps",
                      cap=(n_cap, p_cap))
