"""Group families with exact arithmetic on canonical, hashable element payloads.

Every element is a plain immutable payload: nested tuples of Python ints, or a
bare int index for table-backed groups. Two elements are equal exactly when
their payloads are equal, so payloads double as canonical keys in hash tables
and as sort keys for deterministic output. No arithmetic here ever rounds.

Families:

=====================  =======================================================
FreeAbelianGroup(n)    integer vector of length n
FreeGroup(k)           freely reduced word, letters +i / -i for i in 1..k
HeisenbergGroup()      triple (x, y, z), law (x,y,z)(x',y',z') =
                       (x+x', y+y', z+z'+x*y')
InfiniteDihedralGroup  pair (k, e): k-th power of the translation ab times an
                       optional reflection a, with a^2 = b^2 = 1
FiniteTableGroup       int index into a multiplication table
DirectProductGroup     pair of component payloads
FiniteByDihedralGroup  pair (f, (k, e)): finite normal part and dihedral part
IntegerMatrixGroup(d)  d x d unimodular matrix as a tuple of row tuples
=====================  =======================================================
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Sequence

from .errors import (
    ConfigError,
    FamilyMismatchError,
    InvalidGeneratingSetError,
    PreconditionError,
)

Element = Any

_ALPHABET = "abcdefghijklmnopqrstuvwxyz"


class Group:
    """Base class for a concrete group with canonical element payloads.

    Payloads are validated when they enter the system (``element``, generating
    set and config parsing); the arithmetic methods assume valid payloads and
    stay allocation-lean because ball enumeration calls them in tight loops.
    """

    family = "abstract"

    def identity(self) -> Element:
        raise NotImplementedError

    def multiply(self, g: Element, h: Element) -> Element:
        raise NotImplementedError

    def invert(self, g: Element) -> Element:
        raise NotImplementedError

    def element(self, literal: Any) -> Element:
        """Validate a structured literal and return its canonical payload."""
        raise NotImplementedError

    def render(self, g: Element) -> str:
        """Deterministic string form of the canonical key, used in CSV/JSON."""
        raise NotImplementedError

    def abelianization(self, g: Element) -> tuple[int, ...]:
        """Image of g in the free-abelian quotient Z^r; () when r = 0."""
        return ()

    def standard_generators(self) -> list[Element] | None:
        """Default symmetric generating set, or None when there is no canonical one."""
        return None

    def describe(self) -> str:
        return self.family

    def is_identity(self, g: Element) -> bool:
        return g == self.identity()

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"<{type(self).__name__} {self.describe()}>"


def conjugate(group: Group, s: Element, x: Element) -> Element:
    """Return s x s^-1."""
    return group.multiply(group.multiply(s, x), group.invert(s))


def commutator(group: Group, g: Element, h: Element) -> Element:
    """Return g h g^-1 h^-1."""
    return group.multiply(
        group.multiply(g, h), group.multiply(group.invert(g), group.invert(h))
    )


def _int_vector(literal: Any, length: int, what: str) -> tuple[int, ...]:
    if not isinstance(literal, (list, tuple)) or len(literal) != length:
        raise FamilyMismatchError(f"{what}: expected {length} integers, got {literal!r}")
    out = []
    for v in literal:
        if isinstance(v, bool) or not isinstance(v, int):
            raise FamilyMismatchError(f"{what}: non-integer entry {v!r}")
        out.append(v)
    return tuple(out)


class FreeAbelianGroup(Group):
    """Z^n with componentwise addition."""

    family = "free_abelian"

    def __init__(self, rank: int):
        if rank < 1:
            raise ConfigError(f"free_abelian rank must be >= 1, got {rank}")
        self.rank = rank
        self._id = (0,) * rank

    def identity(self):
        return self._id

    def multiply(self, g, h):
        return tuple(a + b for a, b in zip(g, h))

    def invert(self, g):
        return tuple(-a for a in g)

    def element(self, literal):
        return _int_vector(literal, self.rank, self.describe())

    def render(self, g):
        return "(" + ",".join(str(v) for v in g) + ")"

    def abelianization(self, g):
        return g

    def standard_generators(self):
        gens = []
        for i in range(self.rank):
            e = tuple(1 if j == i else 0 for j in range(self.rank))
            gens.append(e)
            gens.append(self.invert(e))
        return gens

    def describe(self):
        return f"FreeAbelian({self.rank})"


class FreeGroup(Group):
    """Free group of given rank; payloads are freely reduced letter tuples."""

    family = "free"

    def __init__(self, rank: int):
        if rank < 1:
            raise ConfigError(f"free rank must be >= 1, got {rank}")
        self.rank = rank

    def identity(self):
        return ()

    def multiply(self, g, h):
        # cancel at the seam only; both inputs are already reduced
        i = len(g)
        j = 0
        while i > 0 and j < len(h) and g[i - 1] == -h[j]:
            i -= 1
            j += 1
        return g[:i] + h[j:]

    def invert(self, g):
        return tuple(-c for c in reversed(g))

    def element(self, literal):
        if isinstance(literal, str):
            return self._from_word(literal)
        if not isinstance(literal, (list, tuple)):
            raise FamilyMismatchError(f"free element: expected letter list, got {literal!r}")
        out: tuple[int, ...] = ()
        for c in literal:
            if isinstance(c, bool) or not isinstance(c, int) or c == 0 or abs(c) > self.rank:
                raise FamilyMismatchError(f"free element: bad letter {c!r} for rank {self.rank}")
            out = self.multiply(out, (c,))
        return out

    def _from_word(self, word: str):
        out: tuple[int, ...] = ()
        for ch in word:
            low = ch.lower()
            idx = _ALPHABET.find(low)
            if idx < 0 or idx >= self.rank:
                raise FamilyMismatchError(f"free element: unknown letter {ch!r}")
            c = idx + 1
            out = self.multiply(out, (-c,) if ch.isupper() else (c,))
        return out

    def render(self, g):
        if not g:
            return "1"
        if self.rank <= len(_ALPHABET):
            return "".join(
                _ALPHABET[c - 1] if c > 0 else _ALPHABET[-c - 1].upper() for c in g
            )
        return "(" + ",".join(str(c) for c in g) + ")"

    def abelianization(self, g):
        out = [0] * self.rank
        for c in g:
            out[abs(c) - 1] += 1 if c > 0 else -1
        return tuple(out)

    def standard_generators(self):
        gens = []
        for i in range(1, self.rank + 1):
            gens.append((i,))
            gens.append((-i,))
        return gens

    def describe(self):
        return f"Free({self.rank})"


class HeisenbergGroup(Group):
    """Upper-triangular 3x3 integer Heisenberg group in (x, y, z) coordinates.

    a = (1,0,0) and b = (0,1,0) are the unit superdiagonal matrices; the group
    law (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y') is matrix multiplication
    in those coordinates, and [a,b] = (0,0,1) generates the center.
    """

    family = "heisenberg3"

    def identity(self):
        return (0, 0, 0)

    def multiply(self, g, h):
        return (g[0] + h[0], g[1] + h[1], g[2] + h[2] + g[0] * h[1])

    def invert(self, g):
        return (-g[0], -g[1], -g[2] + g[0] * g[1])

    def element(self, literal):
        return _int_vector(literal, 3, "heisenberg3 element")

    def render(self, g):
        return "(" + ",".join(str(v) for v in g) + ")"

    def abelianization(self, g):
        return (g[0], g[1])

    def standard_generators(self):
        return [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0)]

    def describe(self):
        return "Heisenberg3"


def _dinf_mul(d1, d2):
    return (d1[0] + (1 - 2 * d1[1]) * d2[0], d1[1] ^ d2[1])


def _dinf_inv(d):
    return (-d[0], 0) if d[1] == 0 else d


def _dinf_letters(d) -> tuple[str, ...]:
    """Alternating word in the reflections a, b whose normal form is d."""
    k, e = d
    if k == 0:
        return ("a",) if e else ()
    if k > 0:
        word = ("a", "b") * k
        return word + ("a",) if e else word
    m = -k
    if e:
        return ("b",) + ("a", "b") * (m - 1)
    return ("b", "a") * m


def _dinf_word_length(d) -> int:
    k, e = d
    if e == 0:
        return 2 * abs(k)
    return 2 * k + 1 if k >= 0 else 2 * abs(k) - 1


class InfiniteDihedralGroup(Group):
    """Infinite dihedral group generated by two reflections a and b.

    Normal form (k, e) stands for (ab)^k a^e; the translation t = ab satisfies
    a t a = t^-1, which gives the O(1) product rule below. a = (0,1) and
    b = (-1,1) are the standard generators.
    """

    family = "infinite_dihedral"

    def identity(self):
        return (0, 0)

    def multiply(self, g, h):
        return _dinf_mul(g, h)

    def invert(self, g):
        return _dinf_inv(g)

    def element(self, literal):
        if not isinstance(literal, (list, tuple)) or len(literal) != 2:
            raise FamilyMismatchError(f"infinite_dihedral element: expected (k, e), got {literal!r}")
        k, e = literal
        if isinstance(k, bool) or not isinstance(k, int) or e not in (0, 1):
            raise FamilyMismatchError(f"infinite_dihedral element: bad pair {literal!r}")
        return (k, int(e))

    def render(self, g):
        return f"({g[0]},{g[1]})"

    def word_length(self, g) -> int:
        """Reduced length of g over the two standard reflections."""
        return _dinf_word_length(g)

    def standard_generators(self):
        return [(0, 1), (-1, 1)]

    def describe(self):
        return "InfiniteDihedral"


class FiniteTableGroup(Group):
    """Finite group given by a full multiplication table over indices 0..n-1.

    The table is validated up front: rows and columns must be permutations,
    a two-sided identity and inverses must exist, and associativity is checked
    exhaustively (tables here are small; cost is n^3).
    """

    family = "finite_table"

    def __init__(self, table: Sequence[Sequence[int]], names: Sequence[str] | None = None):
        n = len(table)
        if n == 0:
            raise ConfigError("finite_table: empty table")
        tab = []
        for i, row in enumerate(table):
            if len(row) != n:
                raise ConfigError(f"finite_table: row {i} has length {len(row)}, expected {n}")
            for v in row:
                if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                    raise ConfigError(f"finite_table: entry {v!r} out of range in row {i}")
            tab.append(tuple(row))
        self.table = tuple(tab)
        self.order = n
        for i in range(n):
            if sorted(self.table[i]) != list(range(n)):
                raise ConfigError(f"finite_table: row {i} is not a permutation")
            if sorted(self.table[j][i] for j in range(n)) != list(range(n)):
                raise ConfigError(f"finite_table: column {i} is not a permutation")
        ident = None
        for e in range(n):
            if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n)):
                ident = e
                break
        if ident is None:
            raise ConfigError("finite_table: no two-sided identity")
        self._id = ident
        inv = [None] * n
        for g in range(n):
            for h in range(n):
                if self.table[g][h] == ident and self.table[h][g] == ident:
                    inv[g] = h
                    break
            if inv[g] is None:
                raise ConfigError(f"finite_table: element {g} has no inverse")
        self._inv = tuple(inv)
        for a in range(n):
            for b in range(n):
                row_ab = self.table[self.table[a][b]]
                ta = self.table[a]
                tb = self.table[b]
                for c in range(n):
                    if row_ab[c] != ta[tb[c]]:
                        raise ConfigError(f"finite_table: not associative at ({a},{b},{c})")
        if names is not None:
            if len(names) != n or len(set(names)) != n:
                raise ConfigError("finite_table: names must be distinct, one per element")
            self.names = tuple(str(x) for x in names)
        else:
            self.names = tuple(("e" if i == self._id else f"g{i}") for i in range(n))
        self._name_index = {name: i for i, name in enumerate(self.names)}

    def identity(self):
        return self._id

    def multiply(self, g, h):
        return self.table[g][h]

    def invert(self, g):
        return self._inv[g]

    def element(self, literal):
        if isinstance(literal, str):
            if literal not in self._name_index:
                raise FamilyMismatchError(f"finite_table element: unknown name {literal!r}")
            return self._name_index[literal]
        if isinstance(literal, bool) or not isinstance(literal, int) or not 0 <= literal < self.order:
            raise FamilyMismatchError(f"finite_table element: bad index {literal!r}")
        return literal

    def render(self, g):
        return self.names[g]

    def standard_generators(self):
        return [g for g in range(self.order) if g != self._id]

    def describe(self):
        return f"FiniteTable({self.order})"


class DirectProductGroup(Group):
    """Direct product of two component groups; payloads are component pairs."""

    family = "direct_product"

    def __init__(self, left: Group, right: Group):
        self.left = left
        self.right = right
        self._id = (left.identity(), right.identity())

    def identity(self):
        return self._id

    def multiply(self, g, h):
        return (self.left.multiply(g[0], h[0]), self.right.multiply(g[1], h[1]))

    def invert(self, g):
        return (self.left.invert(g[0]), self.right.invert(g[1]))

    def element(self, literal):
        if not isinstance(literal, (list, tuple)) or len(literal) != 2:
            raise FamilyMismatchError(f"direct_product element: expected a pair, got {literal!r}")
        return (self.left.element(literal[0]), self.right.element(literal[1]))

    def render(self, g):
        return f"({self.left.render(g[0])},{self.right.render(g[1])})"

    def abelianization(self, g):
        return self.left.abelianization(g[0]) + self.right.abelianization(g[1])

    def standard_generators(self):
        lg = self.left.standard_generators()
        rg = self.right.standard_generators()
        if lg is None or rg is None:
            return None
        le, re = self.left.identity(), self.right.identity()
        return [(g, re) for g in lg] + [(le, h) for h in rg]

    def describe(self):
        return f"DirectProduct({self.left.describe()},{self.right.describe()})"


class FiniteByDihedralGroup(Group):
    """Extension of the infinite dihedral group by a finite normal subgroup F.

    The data is F as a multiplication table, the actions of the two chosen
    lifts on F (alpha(x) = a x a^-1, beta(x) = b x b^-1 for the lifts a, b of
    the dihedral reflections), and the squares a^2, b^2, which land in F.
    Coherence of that data is exactly what makes the extension a group, so it
    is validated here: alpha and beta must be automorphisms fixing their own
    square, and alpha^2, beta^2 must agree with conjugation by those squares.

    Payload (f, d): the element f * w(d), where w(d) is the letterwise lift of
    the alternating dihedral word for d. Products push lift letters through F
    by the automorphism action and absorb squares via a^2, b^2 in F.
    """

    family = "finite_by_dihedral"

    def __init__(
        self,
        finite: FiniteTableGroup,
        alpha: Sequence[int],
        beta: Sequence[int],
        a_squared: int | str = None,
        b_squared: int | str = None,
    ):
        self.finite = finite
        n = finite.order
        self.alpha = self._check_perm(alpha, "alpha")
        self.beta = self._check_perm(beta, "beta")
        self.a_squared = finite.element(a_squared if a_squared is not None else finite.identity())
        self.b_squared = finite.element(b_squared if b_squared is not None else finite.identity())
        mul = finite.multiply
        inv = finite.invert
        for name, act in (("alpha", self.alpha), ("beta", self.beta)):
            for x in range(n):
                for y in range(n):
                    if act[mul(x, y)] != mul(act[x], act[y]):
                        raise ConfigError(f"finite_by_dihedral: {name} is not an automorphism")
        for name, act, sq in (("alpha", self.alpha, self.a_squared), ("beta", self.beta, self.b_squared)):
            if act[sq] != sq:
                raise ConfigError(f"finite_by_dihedral: {name} must fix the lift square")
            for x in range(n):
                if act[act[x]] != mul(mul(sq, x), inv(sq)):
                    raise ConfigError(
                        f"finite_by_dihedral: {name}^2 must equal conjugation by the lift square"
                    )
        self._id = (finite.identity(), (0, 0))

    def _check_perm(self, perm, name):
        n = self.finite.order
        if len(perm) != n or sorted(perm) != list(range(n)):
            raise ConfigError(f"finite_by_dihedral: {name} is not a permutation of 0..{n - 1}")
        return tuple(perm)

    def identity(self):
        return self._id

    def _act(self, d, f):
        # conjugation of f by the canonical lift of d, applied letter by letter
        for letter in reversed(_dinf_letters(d)):
            f = self.alpha[f] if letter == "a" else self.beta[f]
        return f

    def _mul_letter(self, f, d, letter):
        step = (0, 1) if letter == "a" else (-1, 1)
        d2 = _dinf_mul(d, step)
        if _dinf_word_length(d2) > _dinf_word_length(d):
            return (f, d2)
        # the dihedral word dropped its last letter; the doubled lift is a square in F
        square = self.a_squared if letter == "a" else self.b_squared
        return (self.finite.multiply(f, self._act(d2, square)), d2)

    def multiply(self, g, h):
        f = self.finite.multiply(g[0], self._act(g[1], h[0]))
        d = g[1]
        for letter in _dinf_letters(h[1]):
            f, d = self._mul_letter(f, d, letter)
        return (f, d)

    def invert(self, g):
        d_inv = _dinf_inv(g[1])
        residue = self.multiply((self.finite.identity(), d_inv), g)[0]
        return (self.finite.invert(residue), d_inv)

    def element(self, literal):
        if not isinstance(literal, (list, tuple)):
            raise FamilyMismatchError(f"finite_by_dihedral element: expected a pair, got {literal!r}")
        if len(literal) == 3:
            f, k, e = literal
            d = (k, e)
        elif len(literal) == 2:
            f, d = literal
        else:
            raise FamilyMismatchError(f"finite_by_dihedral element: bad literal {literal!r}")
        if not isinstance(d, (list, tuple)) or len(d) != 2:
            raise FamilyMismatchError(f"finite_by_dihedral element: bad dihedral part {d!r}")
        k, e = d
        if isinstance(k, bool) or not isinstance(k, int) or e not in (0, 1):
            raise FamilyMismatchError(f"finite_by_dihedral element: bad dihedral part {d!r}")
        return (self.finite.element(f), (k, int(e)))

    def render(self, g):
        return f"({self.finite.render(g[0])},{g[1][0]},{g[1][1]})"

    def dihedral_part(self, g):
        """Image of g under the quotient map onto the dihedral group."""
        return g[1]

    def standard_generators(self):
        """The preimage of {1, a, b} minus the identity: all f, then the two
        lift cosets f*a and f*b, listed in table order."""
        f_all = list(range(self.finite.order))
        ident = self.finite.identity()
        gens = [(f, (0, 0)) for f in f_all if f != ident]
        gens += [(f, (0, 1)) for f in f_all]
        gens += [(f, (-1, 1)) for f in f_all]
        return gens

    def describe(self):
        return f"FiniteByDihedral(F={self.finite.describe()})"


def _mat_det(rows: tuple[tuple[int, ...], ...]) -> int:
    """Exact determinant by fraction-free Gaussian elimination (Bareiss)."""
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


class IntegerMatrixGroup(Group):
    """Subgroup of GL_d(Z) generated by explicit unimodular integer matrices.

    Entries are Python ints, so products never overflow. Inverses are exact:
    for det = ±1 the inverse of an integer matrix is again integral.
    """

    family = "integer_matrix"

    def __init__(self, dimension: int, generators: Iterable[Any] = ()):
        if dimension < 1:
            raise ConfigError(f"integer_matrix dimension must be >= 1, got {dimension}")
        self.dimension = dimension
        self._id = tuple(
            tuple(1 if i == j else 0 for j in range(dimension)) for i in range(dimension)
        )
        self.generators = [self.element(g) for g in generators]

    def identity(self):
        return self._id

    def multiply(self, g, h):
        n = self.dimension
        cols = list(zip(*h))
        return tuple(
            tuple(sum(row[k] * col[k] for k in range(n)) for col in cols) for row in g
        )

    def invert(self, g):
        # exact Gauss-Jordan over rationals; integrality is guaranteed by det = +-1
        n = self.dimension
        aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
               for i, row in enumerate(g)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if pivot is None:
                raise FamilyMismatchError("integer_matrix: singular matrix has no inverse")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            pv = aug[col][col]
            aug[col] = [v / pv for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    factor = aug[r][col]
                    aug[r] = [v - factor * w for v, w in zip(aug[r], aug[col])]
        out = []
        for row in aug:
            vals = row[n:]
            if any(v.denominator != 1 for v in vals):
                raise FamilyMismatchError("integer_matrix: inverse is not integral")
            out.append(tuple(int(v) for v in vals))
        return tuple(out)

    def element(self, literal):
        n = self.dimension
        if not isinstance(literal, (list, tuple)) or len(literal) != n:
            raise FamilyMismatchError(f"integer_matrix element: expected {n} rows")
        rows = tuple(_int_vector(row, n, "integer_matrix row") for row in literal)
        if _mat_det(rows) not in (1, -1):
            raise FamilyMismatchError("integer_matrix element: determinant must be +-1")
        return rows

    def render(self, g):
        return "[" + ",".join("[" + ",".join(str(v) for v in row) + "]" for row in g) + "]"

    def standard_generators(self):
        if not self.generators:
            return None
        gens = list(self.generators)
        seen = set(gens)
        for g in self.generators:
            gi = self.invert(g)
            if gi not in seen:
                gens.append(gi)
                seen.add(gi)
        return gens

    def describe(self):
        return f"IntegerMatrix({self.dimension})"


class GeneratingSet:
    """Ordered, duplicate-free, symmetric generating set without the identity.

    With ``symmetrize=True`` missing inverses are appended after the listed
    elements; with ``symmetrize=False`` a missing inverse is a construction
    error naming the offending element.
    """

    def __init__(self, group: Group, elements: Iterable[Element], symmetrize: bool = True):
        self.group = group
        ordered: list[Element] = []
        seen: set[Element] = set()
        for g in elements:
            if group.is_identity(g):
                raise InvalidGeneratingSetError("generating set must not contain the identity")
            if g not in seen:
                ordered.append(g)
                seen.add(g)
        if not ordered:
            raise InvalidGeneratingSetError("generating set is empty")
        for g in list(ordered):
            gi = group.invert(g)
            if gi not in seen:
                if not symmetrize:
                    raise InvalidGeneratingSetError(
                        f"generating set is not symmetric: missing inverse of {group.render(g)}"
                    )
                ordered.append(gi)
                seen.add(gi)
        self.elements: tuple[Element, ...] = tuple(ordered)
        self.inverses: tuple[Element, ...] = tuple(group.invert(g) for g in ordered)

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return g in set(self.elements)

    def pairs(self) -> list[tuple[Element, Element]]:
        """Generators zipped with their inverses, in set order."""
        return list(zip(self.elements, self.inverses))


class GroupSpec:
    """A group together with the symmetric generating set defining its metric."""

    def __init__(self, group: Group, gens: GeneratingSet | Iterable[Element] | None = None):
        self.group = group
        if gens is None:
            std = group.standard_generators()
            if std is None:
                raise ConfigError(
                    f"{group.describe()} has no default generators; supply them explicitly"
                )
            gens = GeneratingSet(group, std)
        elif not isinstance(gens, GeneratingSet):
            gens = GeneratingSet(group, gens)
        self.gens = gens
        self.letters = self._assign_letters()

    def _assign_letters(self) -> dict[str, Element]:
        # one lowercase letter per generator, skipping inverses of letters
        # already assigned, so "abAB" reads as a b a^-1 b^-1
        letters: dict[str, Element] = {}
        covered: set[Element] = set()
        pos = 0
        for g in self.gens.elements:
            if g in covered or pos >= len(_ALPHABET):
                continue
            letters[_ALPHABET[pos]] = g
            covered.add(g)
            covered.add(self.group.invert(g))
            pos += 1
        return letters

    def word(self, text: str) -> Element:
        """Product of generator letters; capitals are inverses."""
        out = self.group.identity()
        for ch in text:
            base = self.letters.get(ch.lower())
            if base is None:
                raise FamilyMismatchError(f"word {text!r}: no generator for letter {ch!r}")
            out = self.group.multiply(out, self.group.invert(base) if ch.isupper() else base)
        return out

    def describe(self) -> str:
        return f"{self.group.describe()} with {self.gens.size} generators"


__all__ = [
    "Element",
    "Group",
    "FreeAbelianGroup",
    "FreeGroup",
    "HeisenbergGroup",
    "InfiniteDihedralGroup",
    "FiniteTableGroup",
    "DirectProductGroup",
    "FiniteByDihedralGroup",
    "IntegerMatrixGroup",
    "GeneratingSet",
    "GroupSpec",
    "conjugate",
    "commutator",
]
