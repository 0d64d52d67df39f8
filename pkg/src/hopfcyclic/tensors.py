"""Multi-index bookkeeping for tensor product spaces.

Vectors in V_1 (x) ... (x) V_k are dicts keyed by flat indices; the flat
index is row-major (first factor slowest).  Operators on tensor spaces
are assembled basis element by basis element via build_matrix.
"""

from .linalg import Matrix


def flatten(idx, dims):
    out = 0
    for i, d in zip(idx, dims):
        out = out * d + i
    return out


def unflatten(flat, dims):
    idx = []
    for d in reversed(dims):
        idx.append(flat % d)
        flat //= d
    return tuple(reversed(idx))


def prod(dims):
    out = 1
    for d in dims:
        out *= d
    return out


def build_matrix(field, src_dims, tgt_dims, image):
    """Matrix of the linear map sending basis multi-index t to image(t).

    image(t) returns a dict mapping target multi-index tuples to scalars.
    """
    src_total = prod(src_dims)
    tgt_total = prod(tgt_dims)
    m = Matrix(field, tgt_total, src_total)
    for col in range(src_total):
        t = unflatten(col, src_dims)
        for tt, v in image(t).items():
            if not field.is_zero(v):
                row = flatten(tt, tgt_dims)
                m.entries[(row, col)] = field.add(m.entries.get((row, col), field.zero), v)
                if field.is_zero(m.entries[(row, col)]):
                    del m.entries[(row, col)]
    return m


def tensor_vecs(field, u, v):
    """Tensor product of two multi-index keyed dict-vectors."""
    out = {}
    for ku, xu in u.items():
        if not isinstance(ku, tuple):
            ku = (ku,)
        for kv, xv in v.items():
            if not isinstance(kv, tuple):
                kv = (kv,)
            out[ku + kv] = field.mul(xu, xv)
    return out


def as_tuple_keys(vec):
    return {k if isinstance(k, tuple) else (k,): v for k, v in vec.items()}


def flatten_vec(vec, dims):
    return {flatten(k, dims): v for k, v in as_tuple_keys(vec).items()}
