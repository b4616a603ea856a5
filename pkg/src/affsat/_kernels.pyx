# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled signature-rule kernels; contract identical to affsat._kernels_py.

The per-node, per-residue boundary scan is the hot inner loop of crystal
graph generation, hence the C implementation.  Partitions stay ordinary
Python tuples at the API boundary.
"""

from libc.stdlib cimport free, malloc

IMPL = "cython"


def signature_scan(parts, long charge, long n):
    """Per-residue (eps, phi, good_add_row, good_rem_row), as a tuple of n 4-tuples."""
    cdef Py_ssize_t m = len(parts)
    cdef Py_ssize_t r, i
    cdef long row_len, prev_len, below, res
    cdef long *p = NULL
    cdef long *stack_data = NULL   # n stacks of capacity m + 2, flattened
    cdef long *stack_size = NULL
    cdef long *eps = NULL
    cdef long *last_rem = NULL
    cdef Py_ssize_t cap = m + 2

    p = <long *> malloc(sizeof(long) * (m if m > 0 else 1))
    stack_data = <long *> malloc(sizeof(long) * cap * n)
    stack_size = <long *> malloc(sizeof(long) * n)
    eps = <long *> malloc(sizeof(long) * n)
    last_rem = <long *> malloc(sizeof(long) * n)
    if p == NULL or stack_data == NULL or stack_size == NULL or eps == NULL or last_rem == NULL:
        free(p); free(stack_data); free(stack_size); free(eps); free(last_rem)
        raise MemoryError()
    try:
        for r in range(m):
            p[r] = parts[r]
        for i in range(n):
            stack_size[i] = 0
            eps[i] = 0
            last_rem[i] = 0
        for r in range(1, m + 2):
            row_len = p[r - 1] if r <= m else 0
            prev_len = p[r - 2] if r >= 2 else 0
            if r == 1 or prev_len > row_len:
                res = (row_len + 1 - r + charge) % n
                if res < 0:
                    res += n
                stack_data[res * cap + stack_size[res]] = r
                stack_size[res] += 1
            if r <= m:
                below = p[r] if r < m else 0
                if row_len > below:
                    res = (row_len - r + charge) % n
                    if res < 0:
                        res += n
                    if stack_size[res] > 0:
                        stack_size[res] -= 1
                    else:
                        eps[res] += 1
                        last_rem[res] = r
        return tuple(
            (
                eps[i],
                stack_size[i],
                stack_data[i * cap] if stack_size[i] > 0 else 0,
                last_rem[i],
            )
            for i in range(n)
        )
    finally:
        free(p); free(stack_data); free(stack_size); free(eps); free(last_rem)


cdef inline tuple _fold_word(list tables, long i):
    cdef Py_ssize_t L = len(tables)
    cdef Py_ssize_t k
    cdef long eps = 0, size = 0, extra
    cdef long pos_e = -1, pos_f = -1
    cdef long rem_row = 0, add_row = 0
    cdef long f_eps, f_phi, f_add, f_rem
    cdef tuple entry
    for k in range(L):
        entry = tables[k][i]
        f_eps = entry[0]
        f_phi = entry[1]
        f_add = entry[2]
        f_rem = entry[3]
        if f_eps:
            if f_eps >= size:
                extra = f_eps - size
                size = 0
                if extra:
                    eps += extra
                    pos_e = k
                    rem_row = f_rem
            else:
                size -= f_eps
        if f_phi:
            if size == 0:
                pos_f = k
                add_row = f_add
            size += f_phi
    if size == 0:
        pos_f = -1
        add_row = 0
    return (eps, size, pos_f, pos_e, add_row, rem_row)


def word_scan(tables, long i):
    """Signature fold across a word, given each factor's full scan table.

    Same contract as the pure-Python twin: returns
    (eps, phi, pos_f, pos_e, add_row, rem_row) with -1 for undefined factors.
    """
    return _fold_word(list(tables), i)


cdef void _expand_into(list out, parent_id, tuple word, tuple c, budget,
                       long n, dict cache, bint with_parent):
    cdef Py_ssize_t i
    cdef long phi, pos_f, add_row
    cdef list tables = []
    cdef tuple fold, child, cc
    for factor in word:
        table = cache.get(factor)
        if table is None:
            table = signature_scan(factor[1], factor[0], n)
            cache[factor] = table
        tables.append(table)
    for i in range(n):
        if c[i] >= budget[i]:
            continue
        fold = _fold_word(tables, i)
        phi = fold[1]
        if phi == 0:
            continue
        pos_f = fold[2]
        add_row = fold[4]
        charge, parts = word[pos_f]
        child = word[:pos_f] + ((charge, add_cell(parts, add_row)),) + word[pos_f + 1:]
        cc = c[:i] + (c[i] + 1,) + c[i + 1:]
        if with_parent:
            out.append((parent_id, i, child, cc))
        else:
            out.append((i, child, cc))


def expand_node(word, c, budget, long n, dict cache):
    """Children of a word under every in-budget lowering operator.

    Same contract as the pure-Python twin: list of (residue, child, child_c).
    """
    cdef list out = []
    _expand_into(out, None, word, c, budget, n, cache, False)
    return out


def expand_level(words, cvecs, frontier, budget, long n, dict cache):
    """expand_node over a whole BFS frontier, flattened.

    Same contract as the pure-Python twin: list of
    (parent_id, residue, child_word, child_c) in deterministic order.
    """
    cdef list out = []
    cdef list wlist = <list> words
    cdef list clist = <list> cvecs
    cdef Py_ssize_t idx
    for node_id in frontier:
        idx = node_id
        _expand_into(out, node_id, <tuple> wlist[idx], <tuple> clist[idx],
                     budget, n, cache, True)
    return out


def residue_counts(parts, long charge, long n):
    """Number of cells of each residue, as a tuple of length n."""
    cdef Py_ssize_t m = len(parts)
    cdef Py_ssize_t r, k, j
    cdef long row_len, full, rest, start
    cdef long *counts = <long *> malloc(sizeof(long) * n)
    if counts == NULL:
        raise MemoryError()
    try:
        for j in range(n):
            counts[j] = 0
        for r in range(1, m + 1):
            row_len = parts[r - 1]
            full = row_len // n
            rest = row_len - full * n
            if full > 0:
                for j in range(n):
                    counts[j] += full
            start = (1 - r + charge) % n
            if start < 0:
                start += n
            for k in range(rest):
                counts[(start + k) % n] += 1
        return tuple(counts[j] for j in range(n))
    finally:
        free(counts)


def add_cell(parts, row):
    """Partition with one more cell at the end of the given 1-based row."""
    if row == len(parts) + 1:
        return parts + (1,)
    return parts[: row - 1] + (parts[row - 1] + 1,) + parts[row:]


def remove_cell(parts, row):
    """Partition with the last cell of the given 1-based row removed."""
    new = parts[row - 1] - 1
    if new == 0:
        return parts[: row - 1] + parts[row:]
    return parts[: row - 1] + (new,) + parts[row:]
