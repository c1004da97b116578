"""Clopen subsets of a subshift, as sets of allowed windows at a fixed radius.

A CloSet with radius r and member set M denotes the union of cylinders
{x : x[-r..r] in M}.  Re-expressing at a larger radius never changes the
point set, so all boolean operations work at a common radius.  The reduced
(minimal-radius) form is canonical and backs equality and hashing.
"""

from .errors import EngineMismatch
from .words import Word


class CloSet:
    __slots__ = ("engine", "radius", "members", "_reduced")

    def __init__(self, engine, radius, members):
        self.engine = engine
        self.radius = radius
        self.members = frozenset(members)
        self._reduced = None

    # -- construction -------------------------------------------------------

    @classmethod
    def empty(cls, engine):
        return cls(engine, 0, frozenset())

    @classmethod
    def full(cls, engine):
        return cls(engine, 0, frozenset(engine.allowed_words(1)))

    @classmethod
    def cylinder(cls, engine, word):
        """The set of points whose restriction to the anchored word's support
        equals the word.  An unallowed word gives the empty set."""
        if not isinstance(word, Word):
            raise TypeError("cylinder wants an anchored Word")
        if len(word) == 0:
            return cls.full(engine)
        radius = max(abs(word.start), abs(word.end - 1))
        lo = word.start - (-radius)
        members = [w for w in engine.allowed_words(2 * radius + 1)
                   if w[lo:lo + len(word)] == word.letters]
        return cls(engine, radius, members)

    # -- representation -----------------------------------------------------

    def at_radius(self, radius):
        if radius < self.radius:
            raise ValueError("cannot shrink a CloSet's radius directly; use reduced()")
        if radius == self.radius:
            return self
        pad = radius - self.radius
        members = [w for w in self.engine.allowed_words(2 * radius + 1)
                   if w[pad:pad + 2 * self.radius + 1] in self.members]
        return CloSet(self.engine, radius, members)

    def reduced(self):
        """Canonical minimal-radius form."""
        if self._reduced is not None:
            return self._reduced
        current = self
        while current.radius > 0:
            r = current.radius
            groups = {}
            for u in self.engine.allowed_words(2 * r + 1):
                groups.setdefault(u[1:-1], []).append(u)
            inside = set()
            consistent = True
            for w, extensions in groups.items():
                hits = sum(1 for u in extensions if u in current.members)
                if hits == len(extensions):
                    inside.add(w)
                elif hits != 0:
                    consistent = False
                    break
            if not consistent:
                break
            current = CloSet(self.engine, r - 1, inside)
        self._reduced = current
        current._reduced = current
        return current

    def key(self):
        reduced = self.reduced()
        return (reduced.radius, tuple(sorted(reduced.members,
                                             key=self.engine.alphabet.sort_key)))

    def __eq__(self, other):
        if not isinstance(other, CloSet):
            return NotImplemented
        if self.engine is not other.engine:
            raise EngineMismatch("CloSets live on different engines")
        r = max(self.radius, other.radius)
        return self.at_radius(r).members == other.at_radius(r).members

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        reduced = self.reduced()
        shown = sorted(self.engine.alphabet.format_word(w) for w in reduced.members)
        if len(shown) > 6:
            shown = shown[:6] + ["..."]
        return f"CloSet(r={reduced.radius}, {{{', '.join(shown)}}})"

    # -- boolean algebra ----------------------------------------------------

    def _common(self, other):
        if self.engine is not other.engine:
            raise EngineMismatch("CloSets live on different engines")
        r = max(self.radius, other.radius)
        return self.at_radius(r), other.at_radius(r), r

    def union(self, other):
        a, b, r = self._common(other)
        return CloSet(self.engine, r, a.members | b.members)

    def intersect(self, other):
        a, b, r = self._common(other)
        return CloSet(self.engine, r, a.members & b.members)

    def minus(self, other):
        a, b, r = self._common(other)
        return CloSet(self.engine, r, a.members - b.members)

    def complement(self):
        words = set(self.engine.allowed_words(2 * self.radius + 1))
        return CloSet(self.engine, self.radius, words - self.members)

    def symmetric_difference(self, other):
        a, b, r = self._common(other)
        return CloSet(self.engine, r, a.members ^ b.members)

    def is_empty(self):
        return not self.members

    def is_disjoint(self, other):
        return self.intersect(other).is_empty()

    def is_subset(self, other):
        a, b, _ = self._common(other)
        return a.members <= b.members

    # -- dynamics -----------------------------------------------------------

    def shift_image(self, k):
        """phi^k of this set: x is in the image iff x[k-r .. k+r] is a member."""
        if k == 0:
            return self
        r = self.radius
        big = r + abs(k)
        lo = (k - r) + big
        members = [w for w in self.engine.allowed_words(2 * big + 1)
                   if w[lo:lo + 2 * r + 1] in self.members]
        return CloSet(self.engine, big, members)
