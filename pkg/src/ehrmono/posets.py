"""Graded posets with top and bottom, and Stanley's g-polynomial.

Posets are stored with down-sets as bitmasks.  The g-polynomial of a rank-n
poset B is defined by g = 1 in rank 0 and otherwise as the unique polynomial
of degree < n/2 with

    t^n g(B; 1/t) = sum_x (t - 1)^(n - rank(x)) g([0,x]; t).

Polynomials here are plain integer coefficient tuples (index = degree).
"""

from __future__ import annotations

from .errors import NotComparable


def poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(a, b):
    n = max(len(a), len(b))
    return poly_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def poly_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return poly_trim(out)


def poly_pow_t_minus_1(k):
    out = (1,)
    for _ in range(k):
        out = poly_mul(out, (-1, 1))
    return out


class Poset:
    """Finite bounded graded poset."""

    def __init__(self, elements, leq):
        """``elements``: hashable labels; ``leq(a, b)``: order predicate."""
        self.elements = tuple(elements)
        n = len(self.elements)
        self._down = [0] * n
        for i, a in enumerate(self.elements):
            mask = 0
            for j, b in enumerate(self.elements):
                if leq(b, a):
                    mask |= 1 << j
            self._down[i] = mask
        self._up = [0] * n
        for i in range(n):
            for j in range(n):
                if self._down[j] >> i & 1:
                    self._up[i] |= 1 << j
        bottoms = [i for i in range(n) if self._up[i] == (1 << n) - 1]
        tops = [i for i in range(n) if self._down[i] == (1 << n) - 1]
        if len(bottoms) != 1 or len(tops) != 1:
            raise ValueError("poset must have unique bottom and top")
        self.bottom = bottoms[0]
        self.top = tops[0]
        self.rank = self._compute_ranks()
        self._g_lower = None
        self._g_cache = {}

    def _compute_ranks(self):
        n = len(self.elements)
        order = sorted(range(n), key=lambda i: bin(self._down[i]).count("1"))
        rank = [0] * n
        for i in order:
            below = self._down[i] & ~(1 << i)
            rank[i] = max((rank[j] + 1 for j in range(n) if below >> j & 1), default=0)
        return tuple(rank)

    def __len__(self):
        return len(self.elements)

    def index(self, label):
        return self.elements.index(label)

    def leq(self, a, b) -> bool:
        return bool(self._down[self.index(b)] >> self.index(a) & 1)

    @property
    def total_rank(self) -> int:
        return self.rank[self.top]

    # -- constructions -----------------------------------------------------

    def interval(self, a, b) -> "Poset":
        ia, ib = self.index(a), self.index(b)
        if not (self._down[ib] >> ia & 1):
            raise NotComparable(f"{a!r} is not below {b!r}")
        mask = self._up[ia] & self._down[ib]
        members = [i for i in range(len(self.elements)) if mask >> i & 1]
        sub = [self.elements[i] for i in members]
        down = {self.elements[i]: self._down[i] for i in members}
        idx = {self.elements[i]: i for i in members}
        return Poset(sub, lambda x, y: bool(down[y] >> idx[x] & 1))

    def dual(self) -> "Poset":
        down = {e: self._down[i] for i, e in enumerate(self.elements)}
        idx = {e: i for i, e in enumerate(self.elements)}
        return Poset(self.elements, lambda x, y: bool(down[x] >> idx[y] & 1))

    # -- validation -----------------------------------------------------------

    def is_graded(self) -> bool:
        n = len(self.elements)
        covers = [[] for _ in range(n)]
        for i in range(n):
            below = self._down[i] & ~(1 << i)
            for j in range(n):
                if below >> j & 1:
                    between = self._up[j] & self._down[i] & ~(1 << i) & ~(1 << j)
                    if not between:
                        covers[i].append(j)
        for i in range(n):
            for j in covers[i]:
                if self.rank[i] != self.rank[j] + 1:
                    return False
        return True

    def is_eulerian(self) -> bool:
        if not self.is_graded():
            return False
        n = len(self.elements)
        for i in range(n):
            for j in range(n):
                if i != j and self._down[i] >> j & 1:
                    mask = self._up[j] & self._down[i]
                    balance = 0
                    for k in range(n):
                        if mask >> k & 1:
                            balance += -1 if self.rank[k] % 2 else 1
                    if balance != 0:
                        return False
        return True

    # -- g-polynomials ------------------------------------------------------------

    def g_lower_table(self):
        """g([0,x]; t) for every element x, computed by one DP pass."""
        if self._g_lower is not None:
            return self._g_lower
        n = len(self.elements)
        table = [None] * n
        for i in sorted(range(n), key=lambda i: self.rank[i]):
            r = self.rank[i]
            if r == 0:
                table[i] = (1,)
                continue
            acc = ()
            below = self._down[i] & ~(1 << i)
            for j in range(n):
                if below >> j & 1:
                    acc = poly_add(acc, poly_mul(poly_pow_t_minus_1(r - self.rank[j]), table[j]))
            # t^r g(1/t) - g(t) = acc and deg g < r/2 forces g_k = -acc_k
            g = [-acc[k] if k < len(acc) else 0 for k in range((r + 1) // 2)]
            table[i] = poly_trim(g)
        self._g_lower = table
        return table

    def g_polynomial(self):
        """g([0,1]; t) as an integer coefficient tuple."""
        return self.g_lower_table()[self.top]

    def g_interval(self, a, b):
        key = ("g", a, b)
        if key not in self._g_cache:
            self._g_cache[key] = self.interval(a, b).g_polynomial()
        return self._g_cache[key]

    def g_interval_dual(self, a, b):
        key = ("g*", a, b)
        if key not in self._g_cache:
            self._g_cache[key] = self.interval(a, b).dual().g_polynomial()
        return self._g_cache[key]

    def stanley_residual(self):
        """sum_x (-1)^rank(x) g([0,x]; t) g([x,1]*; t); zero when Eulerian of
        positive rank."""
        lower = self.g_lower_table()
        dual = self.dual()
        dual_lower = dual.g_lower_table()
        dual_idx = {e: i for i, e in enumerate(dual.elements)}
        acc = ()
        for i, e in enumerate(self.elements):
            sign = -1 if self.rank[i] % 2 else 1
            term = poly_mul(lower[i], dual_lower[dual_idx[e]])
            acc = poly_add(acc, tuple(sign * c for c in term))
        return acc


def face_poset(faces) -> Poset:
    """Poset of ``(vertexset, dim)`` faces ordered by vertex set inclusion."""
    labels = sorted(faces, key=lambda f: (len(f), sorted(f)))
    return Poset(labels, lambda a, b: a <= b)


def boolean_poset(n: int) -> Poset:
    subsets = []
    for mask in range(1 << n):
        subsets.append(frozenset(i for i in range(n) if mask >> i & 1))
    return Poset(subsets, lambda a, b: a <= b)
