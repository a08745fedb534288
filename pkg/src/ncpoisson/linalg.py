"""Exact sparse linear algebra over the rationals.

Vectors are plain dicts ``index -> Fraction`` with no zero entries.  Matrices
are :class:`SparseMatrix` objects.  Elimination always picks the leftmost
available pivot so that bases come out the same on every run.
"""
from fractions import Fraction

from .errors import SubspaceNotContained, DimensionMismatch


def as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def clean(vec):
    return {k: v for k, v in vec.items() if v != 0}


def add_scaled(target, vec, scale):
    """target += scale * vec, in place."""
    if scale == 0:
        return target
    for k, v in vec.items():
        nv = target.get(k, 0) + scale * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)
    return target


class SparseMatrix:
    """Rows x cols matrix stored as a dict of nonzero entries."""

    def __init__(self, rows, cols, entries=None):
        self.rows = rows
        self.cols = cols
        self.entries = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise DimensionMismatch(f"entry ({i},{j}) outside {rows}x{cols}")
            v = as_fraction(v)
            if v:
                self.entries[(i, j)] = v

    @classmethod
    def from_dense(cls, rows):
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        ent = {}
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise DimensionMismatch("ragged rows")
            for j, x in enumerate(row):
                if x:
                    ent[(i, j)] = x
        return cls(nrows, ncols, ent)

    @classmethod
    def from_columns(cls, nrows, columns):
        """Build from a list of sparse column vectors."""
        ent = {}
        for j, col in enumerate(columns):
            for i, v in col.items():
                ent[(i, j)] = v
        return cls(nrows, len(columns), ent)

    def row_dicts(self):
        out = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def column(self, j):
        return {i: v for (i, jj), v in self.entries.items() if jj == j}

    def apply(self, vec):
        out = {}
        for (i, j), v in self.entries.items():
            x = vec.get(j)
            if x:
                out[i] = out.get(i, 0) + v * x
        return clean(out)

    def to_dense(self):
        m = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            m[i][j] = v
        return m

    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={len(self.entries)})"


class SubspaceBasis:
    """Linearly independent sparse vectors in a space of dimension ``ambient_dim``."""

    def __init__(self, ambient_dim, vectors=(), check=True):
        self.ambient_dim = ambient_dim
        self.vectors = [clean(dict(v)) for v in vectors]
        if check:
            if any(not v for v in self.vectors):
                raise DimensionMismatch("zero vector in a basis")
            if _rank_of_rows(self.vectors) != len(self.vectors):
                raise DimensionMismatch("basis vectors are linearly dependent")

    @property
    def dim(self):
        return len(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __repr__(self):
        return f"SubspaceBasis(ambient={self.ambient_dim}, dim={self.dim})"


def _echelon(rows):
    """Row-reduce a list of sparse row dicts.

    Returns (reduced_rows, pivots) where reduced_rows[k] has pivot column
    pivots[k] with coefficient 1 and every other reduced row is zero there.
    """
    work = [dict(r) for r in rows if r]
    reduced = []
    pivots = []
    while work:
        # leftmost pivot among the remaining rows; ties broken by row order
        best = None
        for idx, r in enumerate(work):
            c = min(r)
            if best is None or c < best[0]:
                best = (c, idx)
        col, idx = best
        prow = work.pop(idx)
        inv = Fraction(1) / prow[col]
        prow = {k: v * inv for k, v in prow.items()}
        nxt = []
        for r in work:
            f = r.get(col)
            if f:
                add_scaled(r, prow, -f)
            if r:
                nxt.append(r)
        work = nxt
        for r in reduced:
            f = r.get(col)
            if f:
                add_scaled(r, prow, -f)
        reduced.append(prow)
        pivots.append(col)
    order = sorted(range(len(pivots)), key=lambda k: pivots[k])
    return [reduced[k] for k in order], [pivots[k] for k in order]


def _rank_of_rows(rows):
    return len(_echelon(rows)[1])


def rank(m):
    return len(_echelon(m.row_dicts())[1])


def rank_kernel_image(m):
    """Return (rank, kernel basis, image basis) of ``m``.

    The kernel lives in the column space (dimension ``m.cols``), the image in
    dimension ``m.rows``; the image basis is made of the pivot columns of ``m``.
    """
    red, piv = _echelon(m.row_dicts())
    r = len(piv)
    pivset = set(piv)
    kernel = []
    for free in range(m.cols):
        if free in pivset:
            continue
        v = {free: Fraction(1)}
        for row, p in zip(red, piv):
            x = row.get(free)
            if x:
                v[p] = -x
        kernel.append(v)
    cols = {}
    for (i, j), v in m.entries.items():
        if j in pivset:
            cols.setdefault(j, {})[i] = v
    image = [cols[j] for j in sorted(pivset)]
    return r, SubspaceBasis(m.cols, kernel, check=False), SubspaceBasis(m.rows, image, check=False)


def solve_in_span(basis_vectors, target):
    """Coefficients expressing ``target`` in ``basis_vectors``, or None."""
    # augment each basis vector with a tag block so the combination is tracked
    rows = []
    for k, v in enumerate(basis_vectors):
        r = {(0, key): val for key, val in v.items()}
        r[(1, k)] = Fraction(1)
        rows.append(r)
    red, piv = _echelon(rows)
    rest = {(0, key): val for key, val in target.items()}
    coeffs = {}
    for row, p in zip(red, piv):
        if p[0] != 0:
            break
        f = rest.get(p)
        if f:
            add_scaled(rest, row, -f)
    if any(k[0] == 0 for k in rest):
        return None
    # rest now equals -(sum c_k e_k) in the tag block
    for (blk, k), v in rest.items():
        coeffs[k] = -v
    return coeffs


class QuotientResult(int):
    """An int (the quotient dimension) that also carries a complement lift."""

    complement: list

    def __new__(cls, value, complement):
        obj = super().__new__(cls, value)
        obj.complement = complement
        return obj


def quotient_dim(ambient, sub):
    """dim(ambient) - dim(sub), after checking sub lies in span(ambient).

    The returned int has a ``complement`` attribute holding ambient vectors
    whose images form a basis of the quotient.
    """
    if ambient.ambient_dim != sub.ambient_dim:
        raise DimensionMismatch("subspaces live in different spaces")
    for v in sub.vectors:
        if solve_in_span(ambient.vectors, v) is None:
            raise SubspaceNotContained("subspace vector not in the ambient span")
    sub_rank = _rank_of_rows(sub.vectors)
    amb_rank = _rank_of_rows(ambient.vectors)
    # greedy completion: add ambient vectors that increase the rank
    current = [dict(v) for v in sub.vectors]
    complement = []
    r = sub_rank
    for v in ambient.vectors:
        trial = current + [v]
        nr = _rank_of_rows(trial)
        if nr > r:
            current = trial
            complement.append(dict(v))
            r = nr
    return QuotientResult(amb_rank - sub_rank, complement)


def homology_dim(d_in, d_out):
    """dim ker(d_out) - rank(d_in) for composable maps d_out . d_in = 0."""
    if d_in is not None and d_out is not None and d_in.rows != d_out.cols:
        raise DimensionMismatch("maps are not composable")
    if d_out is not None:
        n = d_out.cols
        kdim = n - rank(d_out)
    else:
        n = d_in.rows
        kdim = n
    return kdim - (rank(d_in) if d_in is not None else 0)


def inverse_matrix(entries, indices):
    """Inverse of a square block given as {(i, j): value} over ``indices``."""
    pos = {k: n for n, k in enumerate(indices)}
    size = len(indices)
    rows = []
    for i in indices:
        r = {}
        for j in indices:
            v = entries.get((i, j), 0)
            if v:
                r[(0, pos[j])] = as_fraction(v)
        r[(1, pos[i])] = Fraction(1)
        rows.append(r)
    red, piv = _echelon(rows)
    if len(piv) != size or any(p[0] != 0 for p in piv):
        raise DimensionMismatch("matrix is singular")
    inv = {}
    for row, p in zip(red, piv):
        i = indices[p[1]]
        for (blk, k), v in row.items():
            if blk == 1:
                inv[(i, indices[k])] = v
    return inv


def annihilator(vectors, keys):
    """Basis of linear functionals (as vectors over ``keys``) killing ``vectors``."""
    pos = {k: i for i, k in enumerate(keys)}
    m = SparseMatrix(len(vectors), len(keys),
                     {(r, pos[k]): v for r, vec in enumerate(vectors) for k, v in vec.items()})
    _, ker, _ = rank_kernel_image(m)
    return [{keys[i]: v for i, v in vec.items()} for vec in ker.vectors]


def intersect_spans(spans, keys):
    """Basis of the intersection of several spans of vectors indexed by ``keys``."""
    constraints = []
    for vecs in spans:
        constraints.extend(annihilator(vecs, keys))
    return annihilator(constraints, keys)


class Reducer:
    """Normal forms modulo a fixed span of sparse vectors.

    ``reduce`` subtracts pivot rows so that the result has no entries in the
    pivot positions; two vectors are congruent iff their normal forms agree.
    """

    def __init__(self, vectors):
        self.rows, self.pivots = _echelon([dict(v) for v in vectors])
        self.by_pivot = dict(zip(self.pivots, self.rows))

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, vec):
        out = dict(vec)
        for p in sorted(set(out) & set(self.by_pivot)):
            f = out.get(p)
            if f:
                add_scaled(out, self.by_pivot[p], -f)
        # pivots are fully reduced against each other, so one sweep suffices
        return out

    def contains(self, vec):
        return not self.reduce(vec)
