"""Crossingless matchings of 2n points and their closed diagrams.

A matching is stored canonically as a balanced parenthesis word of length 2n;
the partner involution (other endpoint of the arc through each basepoint) is
derived from it.  Stacking a matching a under the mirror W(b) of a matching b
closes everything up into a disjoint union of circles; those circles, ordered
by minimal basepoint, drive all sign conventions downstream, so the order is
fixed here once and for all.
"""

from functools import lru_cache

MAX_N = 12


class Matching:
    """A crossingless perfect matching of {1, ..., 2n}."""

    __slots__ = ("n", "word", "partner")

    def __init__(self, word):
        if not isinstance(word, str) or len(word) % 2 != 0 or not word:
            raise ValueError(f"bad matching word: {word!r}")
        n = len(word) // 2
        if n > MAX_N:
            raise ValueError(f"n={n} above practical cap {MAX_N}")
        partner = {}
        stack = []
        for pos, ch in enumerate(word, start=1):
            if ch == "(":
                stack.append(pos)
            elif ch == ")":
                if not stack:
                    raise ValueError(f"unbalanced word: {word!r}")
                opener = stack.pop()
                partner[opener] = pos
                partner[pos] = opener
            else:
                raise ValueError(f"bad character in {word!r}")
        if stack:
            raise ValueError(f"unbalanced word: {word!r}")
        self.n = n
        self.word = word
        self.partner = partner

    @staticmethod
    def from_partner(n, partner):
        """Rebuild the word from a partner involution (sanity-checked)."""
        word = []
        for i in range(1, 2 * n + 1):
            j = partner[i]
            assert partner[j] == i and j != i
            word.append("(" if j > i else ")")
        m = Matching("".join(word))
        assert m.partner == dict(partner), "involution has crossings"
        return m

    def arcs(self):
        """Arcs (i, j) with i < j, sorted."""
        return [(i, self.partner[i]) for i in range(1, 2 * self.n + 1)
                if self.partner[i] > i]

    def __eq__(self, other):
        return isinstance(other, Matching) and self.word == other.word

    def __hash__(self):
        return hash(self.word)

    def __lt__(self, other):
        return self.word < other.word

    def __repr__(self):
        return f"Matching({self.word!r})"

    def __str__(self):
        return self.word


@lru_cache(maxsize=None)
def enumerate_matchings(n):
    """All matchings of 2n points, in lexicographic word order ('(' < ')')."""
    if not isinstance(n, int) or n < 1 or n > MAX_N:
        raise ValueError(f"need 1 <= n <= {MAX_N}, got {n}")

    words = []

    def build(prefix, opened, closed):
        if opened == n and closed == n:
            words.append("".join(prefix))
            return
        if opened < n:
            prefix.append("(")
            build(prefix, opened + 1, closed)
            prefix.pop()
        if closed < opened:
            prefix.append(")")
            build(prefix, opened, closed + 1)
            prefix.pop()

    build([], 0, 0)
    return tuple(Matching(w) for w in words)


class CircleDiagram:
    """The closed diagram W(b)a: circles ordered by minimal basepoint."""

    __slots__ = ("n", "top", "bottom", "circles", "circle_of")

    def __init__(self, b, a):
        if a.n != b.n:
            raise ValueError(f"size mismatch: {a.word} vs {b.word}")
        self.n = a.n
        self.top = b
        self.bottom = a
        seen = set()
        circles = []
        for start in range(1, 2 * self.n + 1):
            if start in seen:
                continue
            # walk the orbit, alternating arcs of a and arcs of b
            circle = set()
            p = start
            while p not in circle:
                circle.add(p)
                q = a.partner[p]
                circle.add(q)
                p = b.partner[q]
            seen |= circle
            circles.append(frozenset(circle))
        circles.sort(key=min)
        self.circles = tuple(circles)
        self.circle_of = {}
        for idx, circle in enumerate(self.circles, start=1):
            for p in circle:
                self.circle_of[p] = idx

    def __len__(self):
        return len(self.circles)

    def __repr__(self):
        return f"CircleDiagram({self.top.word!r}, {self.bottom.word!r})"


@lru_cache(maxsize=None)
def closed_diagram(b, a):
    return CircleDiagram(b, a)


def distance(a, b):
    """d(a, b) = n - number of circles of W(b)a."""
    return a.n - len(closed_diagram(b, a))


def is_arrow(a, b):
    """True iff a -> b: exactly one quadruple i<j<k<l with (i,j),(k,l) arcs of
    a and (i,l),(j,k) arcs of b, all other arcs shared."""
    if a.n != b.n:
        raise ValueError("size mismatch")
    if a == b:
        return False
    diff_a = sorted(set(a.arcs()) - set(b.arcs()))
    diff_b = sorted(set(b.arcs()) - set(a.arcs()))
    if len(diff_a) != 2 or len(diff_b) != 2:
        return False
    (i, j), (k, l) = diff_a
    if not (i < j < k < l):
        return False
    return diff_b == [(i, l), (j, k)]


def lower_arc_count(a):
    """t(a): number of outermost arcs = '(' at nesting depth 0."""
    depth = 0
    count = 0
    for ch in a.word:
        if ch == "(":
            if depth == 0:
                count += 1
            depth += 1
        else:
            depth -= 1
    return count
