"""Exact sparse linear algebra over Q and F_p.

Matrices are sparse maps (row, col) -> nonzero scalar.  Ranks over Q go
through fraction-free Bareiss elimination on an integerized copy; over
F_p plain Gaussian elimination is used.  Subspaces are kept as reduced
echelon bases so membership tests and quotients are cheap.
"""

from fractions import Fraction

from .fields import QQ, PrimeField


class ShapeMismatch(Exception):
    pass


def vec_add(field, u, v):
    w = dict(u)
    for i, x in v.items():
        y = field.add(w.get(i, field.zero), x)
        if field.is_zero(y):
            w.pop(i, None)
        else:
            w[i] = y
    return w

def vec_scale(field, c, u):
    if field.is_zero(c):
        return {}
    return {i: field.mul(c, x) for i, x in u.items()}

def vec_sub(field, u, v):
    return vec_add(field, u, vec_scale(field, field.neg(field.one), v))


class Matrix:
    """Sparse exact matrix.  Stored entries are nonzero."""

    def __init__(self, field, rows, cols, entries=None):
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < rows and 0 <= j < cols):
                    raise ShapeMismatch("entry (%d,%d) out of %dx%d" % (i, j, rows, cols))
                if not field.is_zero(v):
                    self.entries[(i, j)] = v

    @classmethod
    def identity(cls, field, n):
        return cls(field, n, n, {(i, i): field.one for i in range(n)})

    @classmethod
    def zero(cls, field, rows, cols):
        return cls(field, rows, cols)

    @classmethod
    def from_columns(cls, field, rows, columns):
        """columns: list of dict-vectors of length `rows`."""
        ent = {}
        for j, col in enumerate(columns):
            for i, v in col.items():
                if not field.is_zero(v):
                    ent[(i, j)] = v
        return cls(field, rows, len(columns), ent)

    def column(self, j):
        return {i: v for (i, jj), v in self.entries.items() if jj == j}

    def columns(self):
        cols = [dict() for _ in range(self.cols)]
        for (i, j), v in self.entries.items():
            cols[j][i] = v
        return cols

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(sorted(self.entries.items()))))

    def is_zero(self):
        return not self.entries

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("add %dx%d with %dx%d" % (self.rows, self.cols, other.rows, other.cols))
        f = self.field
        ent = dict(self.entries)
        for k, v in other.entries.items():
            w = f.add(ent.get(k, f.zero), v)
            if f.is_zero(w):
                ent.pop(k, None)
            else:
                ent[k] = w
        m = Matrix(f, self.rows, self.cols)
        m.entries = ent
        return m

    def __sub__(self, other):
        return self + other.scale(self.field.neg(self.field.one))

    def scale(self, c):
        f = self.field
        if f.is_zero(c):
            return Matrix(f, self.rows, self.cols)
        m = Matrix(f, self.rows, self.cols)
        m.entries = {k: f.mul(c, v) for k, v in self.entries.items()}
        return m

    def __mul__(self, other):
        """Matrix product self @ other."""
        if self.cols != other.rows:
            raise ShapeMismatch("mul %dx%d with %dx%d" % (self.rows, self.cols, other.rows, other.cols))
        f = self.field
        by_row = {}
        for (i, j), v in other.entries.items():
            by_row.setdefault(i, []).append((j, v))
        ent = {}
        for (i, k), v in self.entries.items():
            for j, w in by_row.get(k, ()):
                x = f.add(ent.get((i, j), f.zero), f.mul(v, w))
                if f.is_zero(x):
                    ent.pop((i, j), None)
                else:
                    ent[(i, j)] = x
        m = Matrix(f, self.rows, other.cols)
        m.entries = ent
        return m

    def apply(self, vec):
        """Apply to a dict-vector (length self.cols), returns dict-vector."""
        f = self.field
        by_col = {}
        for (i, j), v in self.entries.items():
            by_col.setdefault(j, []).append((i, v))
        out = {}
        for j, x in vec.items():
            for i, v in by_col.get(j, ()):
                y = f.add(out.get(i, f.zero), f.mul(v, x))
                if f.is_zero(y):
                    out.pop(i, None)
                else:
                    out[i] = y
        return out

    def transpose(self):
        m = Matrix(self.field, self.cols, self.rows)
        m.entries = {(j, i): v for (i, j), v in self.entries.items()}
        return m

    def kron(self, other):
        """Kronecker product, row-major flattening (self slowest)."""
        f = self.field
        m = Matrix(f, self.rows * other.rows, self.cols * other.cols)
        for (i, j), v in self.entries.items():
            for (k, l), w in other.entries.items():
                m.entries[(i * other.rows + k, j * other.cols + l)] = f.mul(v, w)
        return m

    def dense(self):
        f = self.field
        rows = [[f.zero] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def rank(self):
        if isinstance(self.field, PrimeField):
            return _rank_mod_p(self.dense(), self.field.p)
        return _rank_bareiss(self.dense())

    def rref(self):
        """Reduced row echelon form; returns (pivot column list, dense rref rows)."""
        f = self.field
        rows = self.dense()
        pivots = []
        r = 0
        for c in range(self.cols):
            piv = None
            for i in range(r, self.rows):
                if not f.is_zero(rows[i][c]):
                    piv = i
                    break
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = f.inv(rows[r][c])
            rows[r] = [f.mul(inv, x) for x in rows[r]]
            for i in range(self.rows):
                if i != r and not f.is_zero(rows[i][c]):
                    factor = rows[i][c]
                    rows[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return pivots, rows

    def kernel_basis(self):
        """Kernel as a Subspace of the column space (ambient dim = cols)."""
        f = self.field
        pivots, rows = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for c in free:
            vec = {c: f.one}
            for r, pc in enumerate(pivots):
                v = rows[r][c]
                if not f.is_zero(v):
                    vec[pc] = f.neg(v)
            basis.append(vec)
        return Subspace.from_vectors(f, self.cols, basis)

    def inverse(self):
        if self.rows != self.cols:
            raise ShapeMismatch("inverse of non-square matrix")
        f = self.field
        n = self.rows
        aug = Matrix(f, n, 2 * n)
        aug.entries = dict(self.entries)
        for i in range(n):
            aug.entries[(i, n + i)] = f.one
        pivots, rows = aug.rref()
        if pivots[:n] != list(range(n)):
            raise ValueError("matrix is singular")
        inv = Matrix(f, n, n)
        for i in range(n):
            for j in range(n):
                v = rows[i][n + j]
                if not f.is_zero(v):
                    inv.entries[(i, j)] = v
        return inv

    def pow_int(self, k):
        if self.rows != self.cols:
            raise ShapeMismatch("power of non-square matrix")
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = Matrix.identity(self.field, self.rows)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out


def _rank_bareiss(rows):
    """Fraction-free Bareiss rank of a dense matrix of Fractions."""
    if not rows or not rows[0]:
        return 0
    # clear denominators row by row so all arithmetic is integer
    m = []
    for row in rows:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = den * x.denominator // _gcd(den, x.denominator)
        m.append([int(x * den) if isinstance(x, Fraction) else int(x) * den for x in row])
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev = 1
    r = 0
    for c in range(n_cols):
        piv = None
        for i in range(r, n_rows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, n_rows):
            for j in range(c + 1, n_cols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        rank += 1
        if r == n_rows:
            break
    return rank


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _rank_mod_p(rows, p):
    if not rows or not rows[0]:
        return 0
    m = [[x % p for x in row] for row in rows]
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    r = 0
    for c in range(n_cols):
        piv = None
        for i in range(r, n_rows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        for i in range(r + 1, n_rows):
            if m[i][c]:
                factor = m[i][c] * inv % p
                m[i] = [(x - factor * y) % p for x, y in zip(m[i], m[r])]
        r += 1
        rank += 1
        if r == n_rows:
            break
    return rank


def rank(m):
    return m.rank()


def kernel_basis(m):
    return m.kernel_basis()


class Subspace:
    """Subspace of k^n kept as a reduced echelon basis.

    Basis vectors are dict-vectors; pivot columns strictly increase and
    each pivot entry is 1 with zeros above and below.
    """

    def __init__(self, field, ambient_dim):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = []      # list of dict-vectors
        self.pivots = []     # pivot index per basis vector, sorted

    @classmethod
    def from_vectors(cls, field, ambient_dim, vectors):
        s = cls(field, ambient_dim)
        for v in vectors:
            s.add_vector(v)
        return s

    @property
    def dim(self):
        return len(self.basis)

    def reduce(self, vec):
        """Residual of vec modulo the subspace."""
        f = self.field
        v = dict(vec)
        for piv, b in zip(self.pivots, self.basis):
            c = v.get(piv)
            if c is not None and not f.is_zero(c):
                v = vec_sub(f, v, vec_scale(f, c, b))
        return v

    def contains(self, vec):
        return not self.reduce(vec)

    def add_vector(self, vec):
        """Insert vec if independent; returns True when the subspace grew."""
        f = self.field
        v = self.reduce(vec)
        if not v:
            return False
        piv = min(v)
        v = vec_scale(f, f.inv(v[piv]), v)
        # clear the new pivot from existing basis vectors
        for i, b in enumerate(self.basis):
            c = b.get(piv)
            if c is not None and not f.is_zero(c):
                self.basis[i] = vec_sub(f, b, vec_scale(f, c, v))
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < piv:
            pos += 1
        self.pivots.insert(pos, piv)
        self.basis.insert(pos, v)
        return True

    def copy(self):
        s = Subspace(self.field, self.ambient_dim)
        s.basis = [dict(b) for b in self.basis]
        s.pivots = list(self.pivots)
        return s

    def basis_matrix(self):
        """Columns are the basis vectors."""
        return Matrix.from_columns(self.field, self.ambient_dim, self.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim
                and self.pivots == other.pivots and self.basis == other.basis)


def quotient_space(ambient_dim, sub):
    """Quotient of k^n by a subspace.

    Returns (dim, projection, section) with projection*section = id on the
    quotient and kernel(projection) = sub.  Quotient coordinates are the
    non-pivot coordinates of the ambient space.
    """
    if sub.ambient_dim != ambient_dim:
        raise ShapeMismatch("subspace of dim-%d space inside dim-%d quotient"
                            % (sub.ambient_dim, ambient_dim))
    f = sub.field
    nonpivots = [i for i in range(ambient_dim) if i not in set(sub.pivots)]
    dim = len(nonpivots)
    pos = {i: q for q, i in enumerate(nonpivots)}
    proj = Matrix(f, dim, ambient_dim)
    # projection of e_i: reduce e_i mod sub, read off non-pivot coords
    for i in range(ambient_dim):
        res = sub.reduce({i: f.one})
        for j, v in res.items():
            if j in pos:
                proj.entries[(pos[j], i)] = v
    sect = Matrix(f, ambient_dim, dim)
    for q, i in enumerate(nonpivots):
        sect.entries[(i, q)] = f.one
    return dim, proj, sect


class GradedOperatorSystem:
    """Finite family of spaces indexed by degree plus operators between them."""

    def __init__(self, spaces, operators=()):
        self.spaces = dict(spaces)                 # degree -> dimension
        self.operators = []                        # (src_degree, tgt_degree, Matrix)
        for src, tgt, m in operators:
            self.add_operator(src, tgt, m)

    def add_operator(self, src, tgt, m):
        if src in self.spaces and m.cols != self.spaces[src]:
            raise ShapeMismatch("operator source dim %d, space dim %d" % (m.cols, self.spaces[src]))
        if tgt in self.spaces and m.rows != self.spaces[tgt]:
            raise ShapeMismatch("operator target dim %d, space dim %d" % (m.rows, self.spaces[tgt]))
        self.operators.append((src, tgt, m))


def operator_closure(field, seeds, ops, max_degree, buffer=1):
    """Smallest graded subspace containing seeds, closed under the operators.

    seeds: degree -> iterable of dict-vectors.  ops: GradedOperatorSystem.
    Operators whose source or target exceed max_degree + buffer are ignored.
    Dimensions are finite and grow monotonely, so the loop terminates; the
    returned family is a fixpoint (one more full pass adds nothing).
    """
    if buffer < 1:
        raise ValueError("buffer must be >= 1")
    top = max_degree + buffer
    spaces = {n: Subspace(field, ops.spaces[n]) for n in ops.spaces if n <= top}
    queue = []
    for n, vecs in seeds.items():
        if n not in spaces:
            continue
        for v in vecs:
            if spaces[n].add_vector(v):
                queue.append((n, dict(v)))
    # worklist: whenever a space grows, push the new vector through all ops
    active = [(src, tgt, m) for (src, tgt, m) in ops.operators
              if src <= top and tgt <= top and src in spaces and tgt in spaces]
    by_src = {}
    for src, tgt, m in active:
        by_src.setdefault(src, []).append((tgt, m))
    work = [(n, v) for n, v in queue]
    while work:
        n, v = work.pop()
        for tgt, m in by_src.get(n, ()):
            img = m.apply(v)
            if spaces[tgt].add_vector(img):
                work.append((tgt, img))
    # certify the fixpoint: one full pass over the final bases adds nothing
    for src, tgt, m in active:
        for b in spaces[src].basis:
            if not spaces[tgt].contains(m.apply(b)):
                raise AssertionError("closure fixpoint violated")
    return spaces
