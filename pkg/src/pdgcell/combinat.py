"""Index combinatorics: one-column multipartitions, dominance order, tableaux
with their partial orders and degree statistic, permissible permutations,
multi-standard tableaux for the diagram-algebra basis, and decompositions with
the nonzero-idempotent predicate.

Permutations are tuples in one-line notation, 1-based values: w[i-1] = w(i).
"""

from itertools import permutations as _permutations
from functools import lru_cache


# -- permutations ---------------------------------------------------------


def perm_identity(n):
    return tuple(range(1, n + 1))

def perm_compose(w, v):
    """(w o v)(i) = w(v(i))."""
    return tuple(w[v[i] - 1] for i in range(len(v)))

def perm_inverse(w):
    inv = [0] * len(w)
    for i, wi in enumerate(w):
        inv[wi - 1] = i + 1
    return tuple(inv)

def perm_length(w):
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])

def all_perms(n):
    return sorted(_permutations(range(1, n + 1)))

def longest_element(n):
    return tuple(range(n, 0, -1))

@lru_cache(maxsize=None)
def reduced_word(w):
    """A fixed (deterministic, lexicographically smallest first letter) reduced
    word for w: w = s_{i_1} ... s_{i_k}."""
    w = tuple(w)
    n = len(w)
    winv = perm_inverse(w)
    for i in range(1, n):
        if winv[i - 1] > winv[i]:  # s_i w is shorter
            si_w = tuple(i + 1 if x == i else (i if x == i + 1 else x) for x in w)
            return (i,) + reduced_word(si_w)
    return ()


# -- multipartitions ------------------------------------------------------


class Multipartition:
    """An l-tuple of one-box-or-empty components: 0/1 entries summing to n."""

    __slots__ = ("entries", "boxes")

    def __init__(self, entries):
        entries = tuple(int(e) for e in entries)
        assert all(e in (0, 1) for e in entries)
        self.entries = entries
        self.boxes = tuple(i + 1 for i, e in enumerate(entries) if e)

    @property
    def l(self):
        return len(self.entries)

    @property
    def n(self):
        return len(self.boxes)

    def prefix_sums(self):
        out, s = [], 0
        for e in self.entries:
            s += e
            out.append(s)
        return out

    def __eq__(self, other):
        return isinstance(other, Multipartition) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "Multipartition(%s)" % "".join(str(e) for e in self.entries)

    def serialize(self):
        return "".join(str(e) for e in self.entries)


def enumerate_partitions(n, l):
    """All C(l, n) multipartitions for (n, l), ordered by the fixed total
    (reverse-lexicographic on entries) refinement of the dominance order:
    larger in dominance comes earlier."""
    if not 0 <= n <= l:
        raise ValueError("need 0 <= n <= l")
    out = []
    def rec(prefix, left):
        if len(prefix) == l:
            if left == 0:
                out.append(Multipartition(prefix))
            return
        if l - len(prefix) > left:
            rec(prefix + [1], left - 1) if left > 0 else None
            rec(prefix + [0], left)
        else:
            rec(prefix + [1], left - 1)
    rec([], n)
    return out


def dominance_compare(lam, mu):
    """'greater', 'less', 'equal' or 'incomparable' in the dominance order
    (componentwise comparison of prefix sums)."""
    if (lam.n, lam.l) != (mu.n, mu.l):
        raise ValueError("partitions for different (n, l)")
    a, b = lam.prefix_sums(), mu.prefix_sums()
    ge = all(x >= y for x, y in zip(a, b))
    le = all(x <= y for x, y in zip(a, b))
    if ge and le:
        return "equal"
    if ge:
        return "greater"
    if le:
        return "less"
    return "incomparable"


def dominance_geq(lam, mu):
    return dominance_compare(lam, mu) in ("greater", "equal")


# -- tableaux -------------------------------------------------------------


class Tableau:
    """A bijective filling of the boxes of `shape` by {1..n}, stored through
    its permutation word: word[k-1] = entry in the k-th box j_k.  The standard
    tableau is word = identity."""

    __slots__ = ("shape", "word")

    def __init__(self, shape, word):
        assert sorted(word) == list(range(1, shape.n + 1))
        self.shape = shape
        self.word = tuple(word)

    @classmethod
    def standard(cls, shape):
        return cls(shape, perm_identity(shape.n))

    def box_of(self, entry):
        """The slot position holding `entry`."""
        return self.shape.boxes[self.word.index(entry)]

    def degree(self):
        l, boxes = self.shape.l, self.shape.boxes
        n = len(boxes)
        return n * l - sum(boxes) - 2 * perm_length(self.word)

    def __eq__(self, other):
        return (
            isinstance(other, Tableau)
            and self.shape == other.shape
            and self.word == other.word
        )

    def __hash__(self):
        return hash((self.shape, self.word))

    def __repr__(self):
        return "Tableau(%s, %s)" % (self.shape.serialize(), self.word)


def tableau_geq(t, s):
    """t >= s: entry k of t sits weakly to the left of entry k of s, for every
    k.  (Shapes may differ.)"""
    n = t.shape.n
    return all(t.box_of(k) <= s.box_of(k) for k in range(1, n + 1))


def all_tableaux(shape):
    return [Tableau(shape, w) for w in all_perms(shape.n)]


def tableau_sets(lam, mu):
    """(Tab^mu(lam), Tab_lam(mu)): the shape-lam tableaux >= t^mu, and the
    shape-mu tableaux <= t^lam."""
    t_mu = Tableau.standard(mu)
    t_lam = Tableau.standard(lam)
    upper = [t for t in all_tableaux(lam) if tableau_geq(t, t_mu)]
    lower = [t for t in all_tableaux(mu) if tableau_geq(t_lam, t)]
    return upper, lower


def tab_lower(lam, mu):
    """Tab_lam(mu) = { t in Tab(mu) : t <= t^lam }."""
    t_lam = Tableau.standard(lam)
    return [t for t in all_tableaux(mu) if tableau_geq(t_lam, t)]


def tab_upper(lam, mu):
    """Tab^lam(mu) = { t in Tab(mu) : t >= t^lam }."""
    t_lam = Tableau.standard(lam)
    return [t for t in all_tableaux(mu) if tableau_geq(t, t_lam)]


def big_tab_lower(lam):
    """T_lam = union over mu of Tab_lam(mu), in the fixed partition order."""
    out = []
    for mu in enumerate_partitions(lam.n, lam.l):
        out.extend(tab_lower(lam, mu))
    return out


def tableau_degree(t, l=None):
    return t.degree()


def permissible_permutations(alpha, beta):
    """The (alpha over beta)-permissible permutations: strands from the boxes
    of beta (bottom) to the boxes of alpha (top) that never travel left,
    i.e. { w : j_i(beta) <= j_{w(i)}(alpha) for all i }."""
    n = alpha.n
    ja, jb = alpha.boxes, beta.boxes
    return {
        w
        for w in _permutations(range(1, n + 1))
        if all(jb[i] <= ja[w[i] - 1] for i in range(n))
    }


# -- decompositions -------------------------------------------------------


class Decomposition:
    """An l-tuple of nonnegative integers summing to n."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        self.parts = tuple(int(x) for x in parts)
        assert all(x >= 0 for x in self.parts)

    @property
    def l(self):
        return len(self.parts)

    @property
    def n(self):
        return sum(self.parts)

    def __eq__(self, other):
        return isinstance(other, Decomposition) and self.parts == other.parts

    def __hash__(self):
        return hash(("decomp", self.parts))

    def __repr__(self):
        return "Decomposition(%s)" % (self.parts,)


def enumerate_decompositions(n, l):
    out = []
    def rec(prefix, left):
        if len(prefix) == l - 1:
            out.append(Decomposition(prefix + [left]))
            return
        for x in range(left, -1, -1):
            rec(prefix + [x], left - x)
    rec([], n)
    return out


def idempotent_nonzero(b):
    """The idempotent attached to b survives iff no prefix of b packs more
    boxes than slots: false iff b_1 + ... + b_k > k for some k."""
    s = 0
    for k, x in enumerate(b.parts, start=1):
        s += x
        if s > k:
            return False
    return True


def nonzero_decompositions(n, l):
    return [b for b in enumerate_decompositions(n, l) if idempotent_nonzero(b)]


# -- multi-standard tableaux ----------------------------------------------


class MultiTableau:
    """A filling of the boxes of `shape` by distinct letters (alphabet, index):
    the letter a_i may only occupy the first i slots, and the indices used in
    each alphabet form an initial segment 1..k (no gaps)."""

    __slots__ = ("shape", "letters")

    def __init__(self, shape, letters):
        self.shape = shape
        self.letters = tuple(letters)  # letters[k-1] = (alphabet, index) of box j_k
        for (i, a), j in zip(self.letters, shape.boxes):
            assert i >= j, "alphabet %d not allowed in slot %d" % (i, j)
        assert len(set(self.letters)) == len(self.letters)
        used = {}
        for (i, a) in self.letters:
            used.setdefault(i, set()).add(a)
        for i, s in used.items():
            assert s == set(range(1, len(s) + 1)), "gap in alphabet %d" % i

    def entry_decomposition(self):
        """b_t: how many letters of each alphabet occur."""
        counts = [0] * self.shape.l
        for (i, _a) in self.letters:
            counts[i - 1] += 1
        return Decomposition(counts)

    def matching_permutation(self):
        """Black-strand matching: box j_k at the bottom connects to the slot of
        its letter at the top, where the top letters are ordered by alphabet
        and, within an alphabet, by letter index."""
        order = sorted(range(len(self.letters)), key=lambda k: self.letters[k])
        w = [0] * len(self.letters)
        for pos, k in enumerate(order, start=1):
            w[k] = pos
        return tuple(w)

    def is_restricted(self):
        return all(a == 1 for (_i, a) in self.letters)

    def __eq__(self, other):
        return (
            isinstance(other, MultiTableau)
            and self.shape == other.shape
            and self.letters == other.letters
        )

    def __hash__(self):
        return hash((self.shape, self.letters))

    def __repr__(self):
        return "MultiTableau(%s, %s)" % (self.shape.serialize(), list(self.letters))


def multistandard(shape, restricted=False):
    """T'_shape, or the restricted subset T''_shape (indices all 1) which is in
    bijection with T_shape."""
    n, l = shape.n, shape.l
    boxes = shape.boxes
    out = []
    # choose an alphabet for each box (weakly bounded below by slot position),
    # then distribute letter indices within each alphabet in all orders
    def rec(k, alphabets):
        if k == n:
            groups = {}
            for idx, i in enumerate(alphabets):
                groups.setdefault(i, []).append(idx)
            choices = [[]]
            for i, members in sorted(groups.items()):
                new = []
                for assignment in choices:
                    for order in _permutations(range(1, len(members) + 1)):
                        if restricted and len(members) > 1:
                            continue
                        new.append(assignment + list(zip(members, [(i, a) for a in order])))
                choices = new
            for assignment in choices:
                letters = [None] * n
                for idx, letter in assignment:
                    letters[idx] = letter
                out.append(MultiTableau(shape, letters))
            return
        for i in range(boxes[k], l + 1):
            rec(k + 1, alphabets + [i])
    rec(0, [])
    return out


def multistandard_standard(shape):
    """The standard multi-tableau: letter 1_{j_k} in box j_k."""
    return MultiTableau(shape, [(j, 1) for j in shape.boxes])


def restricted_to_tableau(mt):
    """The bijection from T''_lam to T_lam: a restricted multi-tableau with
    alphabet i_k in box j_k corresponds to the tableau of shape
    mu = {i_1, ..., i_n} holding entry k in slot i_k."""
    assert mt.is_restricted()
    slots = [i for (i, _a) in mt.letters]
    mu = Multipartition([1 if j in slots else 0 for j in range(1, mt.shape.l + 1)])
    word = [0] * len(slots)
    for k, i in enumerate(slots, start=1):
        word[mu.boxes.index(i)] = k
    return Tableau(mu, word)


def tableau_to_restricted(lam, t):
    """Inverse of restricted_to_tableau: t in Tab_lam(mu) becomes the
    multi-tableau of shape lam with letter 1_{box_t(k)} in the k-th box."""
    letters = [(t.box_of(k), 1) for k in range(1, lam.n + 1)]
    return MultiTableau(lam, letters)
