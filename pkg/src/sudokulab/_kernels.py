"""Hot search kernels over flat int8 boards.

Every function here is written against plain numpy arrays and scalar
integer arithmetic so the identical source runs two ways: compiled with
numba's @njit, or as ordinary Python (the numpy fallback). backend.py
loads this module twice and jit-compiles one copy; see there for the
selection rules. Keep this module free of Python-only constructs
(dicts, sets, closures, exceptions) and of imports beyond numpy.

Boards are flat int8 arrays of length 81 in row-major order, 0 = empty.
Candidate sets are int64 bitmasks using bits 1..9 (bit d set = digit d
still legal).

All integer arithmetic stays within int64: the RNG is xorshift32
(Marsaglia 2003), whose intermediates fit in 45 bits, so the jitted and
interpreted paths produce bit-identical streams.
"""

import numpy as np

# Functions backend.py compiles, in dependency order (helpers first).
KERNEL_NAMES = (
    "xs32_next",
    "xs32_below",
    "shuffle_prefix",
    "valid_move",
    "first_empty",
    "backtrack_search",
    "randomized_fill",
    "_count_rec",
    "count_completions",
    "init_candidates",
    "lcv_sort",
    "heuristic_search",
)

# Value ordering codes for heuristic_search.
ORDER_NATURAL = 0
ORDER_SHUFFLED = 1
ORDER_LCV = 2


def _build_peers():
    peers = np.zeros((81, 20), dtype=np.int64)
    for idx in range(81):
        row, col = divmod(idx, 9)
        br, bc = 3 * (row // 3), 3 * (col // 3)
        seen = []
        for c in range(9):
            if c != col:
                seen.append(row * 9 + c)
        for r in range(9):
            if r != row:
                seen.append(r * 9 + col)
        for r in range(br, br + 3):
            for c in range(bc, bc + 3):
                p = r * 9 + c
                if p != idx and p not in seen:
                    seen.append(p)
        peers[idx, :] = seen
    return peers


# 20 peers per cell: 8 row, 8 column, 4 remaining box cells.
PEERS = _build_peers()

# Popcount for 10-bit candidate masks.
POPCOUNT = np.array([bin(i).count("1") for i in range(1024)], dtype=np.int64)

# Bits 1..9 set: the full candidate mask for an unconstrained cell.
FULL_MASK = 0x3FE


def xs32_next(state):
    # xorshift32 (Marsaglia 2003): x ^= x<<13; x ^= x>>17; x ^= x<<5,
    # all mod 2**32. Intermediates stay below 2**45, so int64 is safe.
    state ^= (state << 13) & 0xFFFFFFFF
    state ^= state >> 17
    state ^= (state << 5) & 0xFFFFFFFF
    return state


def xs32_below(state, n):
    # Draw in [0, n) by modulo; documented stream contract, n <= 81.
    state = xs32_next(state)
    return state, state % n


def shuffle_prefix(arr, n, state):
    # Fisher-Yates (Durstenfeld) over arr[:n], swapping high to low.
    for i in range(n - 1, 0, -1):
        state, j = xs32_below(state, i + 1)
        tmp = arr[i]
        arr[i] = arr[j]
        arr[j] = tmp
    return state


def valid_move(cells, row, col, num):
    # num legal at (row, col): absent from the row, column, and 3x3 box.
    for x in range(9):
        if cells[row * 9 + x] == num or cells[x * 9 + col] == num:
            return False
    br = 3 * (row // 3)
    bc = 3 * (col // 3)
    for i in range(3):
        for j in range(3):
            if cells[(br + i) * 9 + (bc + j)] == num:
                return False
    return True


def first_empty(cells, start):
    # First zero cell at or after start in row-major order; -1 if none.
    for i in range(start, 81):
        if cells[i] == 0:
            return i
    return -1


def backtrack_search(cells, start, counters):
    # Baseline solver: row-major cell order, digits ascending.
    # counters[0] = placements tried (nodes), counters[1] = placements
    # undone (backtracks). Cells before `start` are known filled, so the
    # search tree matches a full rescan from (0,0) at every level.
    idx = first_empty(cells, start)
    if idx == -1:
        return True
    row = idx // 9
    col = idx % 9
    for num in range(1, 10):
        if valid_move(cells, row, col, num):
            cells[idx] = num
            counters[0] += 1
            if backtrack_search(cells, idx + 1, counters):
                return True
            cells[idx] = 0
            counters[1] += 1
    return False


def randomized_fill(cells, start, state):
    # Backtracking fill trying digits in a fresh shuffled order at every
    # node; used by the generator to complete partially filled boards.
    idx = first_empty(cells, start)
    if idx == -1:
        return True, state
    row = idx // 9
    col = idx % 9
    nums = np.empty(9, dtype=np.int64)
    for d in range(9):
        nums[d] = d + 1
    state = shuffle_prefix(nums, 9, state)
    for t in range(9):
        num = int(nums[t])
        if valid_move(cells, row, col, num):
            cells[idx] = num
            ok, state = randomized_fill(cells, idx + 1, state)
            if ok:
                return True, state
            cells[idx] = 0
    return False, state


def count_completions(cells, cap):
    # Exhaustive completion counter, capped at `cap`. Independent of the
    # solvers: digit legality comes from per-unit bitmasks, not
    # valid_move. Assumes a consistent input board (wrapper checks).
    rows = np.zeros(9, dtype=np.int64)
    cols = np.zeros(9, dtype=np.int64)
    boxes = np.zeros(9, dtype=np.int64)
    empties = np.empty(81, dtype=np.int64)
    n = 0
    for i in range(81):
        r = i // 9
        c = i % 9
        b = (r // 3) * 3 + c // 3
        v = int(cells[i])
        if v == 0:
            empties[n] = i
            n += 1
        else:
            bit = 1 << v
            rows[r] |= bit
            cols[c] |= bit
            boxes[b] |= bit
    return _count_rec(empties, n, 0, rows, cols, boxes, cap)


def _count_rec(empties, n, k, rows, cols, boxes, cap):
    if k == n:
        return 1
    idx = int(empties[k])
    r = idx // 9
    c = idx % 9
    b = (r // 3) * 3 + c // 3
    used = rows[r] | cols[c] | boxes[b]
    total = 0
    for v in range(1, 10):
        bit = 1 << v
        if used & bit == 0:
            rows[r] |= bit
            cols[c] |= bit
            boxes[b] |= bit
            total += _count_rec(empties, n, k + 1, rows, cols, boxes, cap - total)
            rows[r] &= ~bit
            cols[c] &= ~bit
            boxes[b] &= ~bit
            if total >= cap:
                return total
    return total


def init_candidates(cells, masks, active):
    # Candidate-map state: active[0..n) lists the empty cells in
    # row-major order (the map's keys); masks[i] is the bitmask of
    # digits legal at i, and is 0 for every non-key cell. Returns n.
    n = 0
    for i in range(81):
        if cells[i] == 0:
            masks[i] = FULL_MASK
            active[n] = i
            n += 1
        else:
            masks[i] = 0
    for i in range(81):
        v = int(cells[i])
        if v != 0:
            bit = 1 << v
            for k in range(20):
                # Non-key peers stay 0: clearing a bit of 0 is a no-op.
                p = PEERS[i][k]
                masks[p] &= ~bit
    return n


def lcv_sort(values, nv, masks, cell):
    # Order values[:nv] ascending by how many candidate sets of the
    # cell's still-empty peers contain the value; ties by digit.
    # Non-key cells have mask 0, so they never contribute to a count.
    counts = np.empty(9, dtype=np.int64)
    for t in range(nv):
        bit = 1 << int(values[t])
        cnt = 0
        for k in range(20):
            p = PEERS[cell][k]
            if (masks[p] & bit) != 0:
                cnt += 1
        counts[t] = cnt
    for i in range(1, nv):
        v = values[i]
        cv = counts[i]
        j = i - 1
        while j >= 0 and (counts[j] > cv or (counts[j] == cv and values[j] > v)):
            values[j + 1] = values[j]
            counts[j + 1] = counts[j]
            j -= 1
        values[j + 1] = v
        counts[j + 1] = cv


def heuristic_search(cells, masks, active, n_active, ordering, state, counters, use_trail):
    # Candidate-propagation solver: pick the key cell with the fewest
    # candidates (active is kept sorted, so ties resolve row-major),
    # order its values per `ordering`, place, strip the value from the
    # 20 peers' candidate sets, recurse. By default candidate state is
    # copied per placement; use_trail switches to in-place mutation
    # with undo (identical search tree, different constant factors).
    if n_active == 0:
        return True, state
    best = -1
    best_pos = -1
    best_size = 10
    for t in range(n_active):
        i = active[t]
        s = POPCOUNT[masks[i]]
        if s < best_size:
            best_size = s
            best = i
            best_pos = t
    row = best // 9
    col = best % 9
    values = np.empty(9, dtype=np.int64)
    nv = 0
    m = masks[best]
    for d in range(1, 10):
        if m & (1 << d) != 0:
            values[nv] = d
            nv += 1
    if ordering == ORDER_SHUFFLED:
        state = shuffle_prefix(values, nv, state)
    elif ordering == ORDER_LCV:
        lcv_sort(values, nv, masks, best)
    for t in range(nv):
        num = int(values[t])
        if valid_move(cells, row, col, num):
            cells[best] = num
            counters[0] += 1
            bit = 1 << num
            if use_trail:
                saved_mask = masks[best]
                masks[best] = 0
                for q in range(best_pos, n_active - 1):
                    active[q] = active[q + 1]
                removed = np.empty(20, dtype=np.int64)
                nr = 0
                for k in range(20):
                    p = PEERS[best][k]
                    if (masks[p] & bit) != 0:
                        masks[p] &= ~bit
                        removed[nr] = p
                        nr += 1
                solved, state = heuristic_search(
                    cells, masks, active, n_active - 1, ordering, state,
                    counters, use_trail,
                )
                if solved:
                    return True, state
                for k in range(nr):
                    masks[removed[k]] |= bit
                for q in range(n_active - 1, best_pos, -1):
                    active[q] = active[q - 1]
                active[best_pos] = best
                masks[best] = saved_mask
            else:
                new_masks = masks.copy()
                new_active = active.copy()
                new_masks[best] = 0
                for q in range(best_pos, n_active - 1):
                    new_active[q] = new_active[q + 1]
                for k in range(20):
                    p = PEERS[best][k]
                    new_masks[p] &= ~bit
                solved, state = heuristic_search(
                    cells, new_masks, new_active, n_active - 1, ordering, state,
                    counters, use_trail,
                )
                if solved:
                    return True, state
            cells[best] = 0
            counters[1] += 1
    return False, state
