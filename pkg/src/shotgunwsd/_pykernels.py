"""Pure-Python kernels: window enumeration and gloss-overlap scoring.

These are the fallback twins of the compiled versions in _ckernels.pyx.
The arithmetic (operation order, comparison direction, tie handling) must
stay exactly in step with the compiled code so that both backends produce
bit-identical scores; change them together or not at all.
"""


def enumerate_topc(counts, pair_base, pair_flat, c):
    """Enumerate the full sense-index product and keep the best c.

    counts[t] is the number of senses at window position t. pair_flat
    holds the pairwise relatedness blocks for p < q, block (p, q) stored
    row-major at pair_base[p*n + q] with shape counts[p] x counts[q].

    A configuration's score is the sum over all pairs, accumulated as
    prefix partials: partial[t] = partial[t-1] + sum_{p<t} M[p][t]. The
    odometer advances in lexicographic order (last position fastest), so
    keeping the earlier entry on score ties realizes the
    lowest-sense-indices tie-break.

    Returns (digit tuples best-first, their scores, enumerated count).
    """
    counts = [int(x) for x in counts]
    n = len(counts)
    digits = [0] * n
    partial = [0.0] * n
    best_scores = []
    best_digits = []
    enumerated = 0
    lowest_changed = 0

    while True:
        for t in range(lowest_changed, n):
            acc = partial[t - 1] if t > 0 else 0.0
            dt = digits[t]
            ct = counts[t]
            for p in range(t):
                acc += pair_flat[pair_base[p * n + t] + digits[p] * ct + dt]
            partial[t] = acc
        score = partial[n - 1]
        enumerated += 1

        size = len(best_scores)
        if size < c or score > best_scores[-1]:
            idx = size
            while idx > 0 and best_scores[idx - 1] < score:
                idx -= 1
            best_scores.insert(idx, score)
            best_digits.insert(idx, tuple(digits))
            if len(best_scores) > c:
                best_scores.pop()
                best_digits.pop()

        t = n - 1
        while t >= 0 and digits[t] == counts[t] - 1:
            digits[t] = 0
            t -= 1
        if t < 0:
            break
        digits[t] += 1
        lowest_changed = t

    return best_digits, best_scores, enumerated


def lesk_overlap_ids(seq_a, seq_b):
    """Iterated longest-common-run overlap between two token-id sequences.

    Finds a longest common contiguous run (ties: smallest start in a,
    then in b), replaces it in each sequence by a fresh negative marker
    so it cannot rematch, adds length squared, and repeats until the
    sequences share no token. Token ids must be non-negative.
    """
    a = list(seq_a)
    b = list(seq_b)
    total = 0
    next_marker = -1
    while a and b:
        best, end_a, end_b = _longest_run(a, b)
        if best == 0:
            break
        total += best * best
        a[end_a - best + 1:end_a + 1] = [next_marker]
        b[end_b - best + 1:end_b + 1] = [next_marker - 1]
        next_marker -= 2
    return total


def _longest_run(a, b):
    nb = len(b)
    prev = [0] * nb
    best = 0
    end_a = -1
    end_b = -1
    for i, av in enumerate(a):
        cur = [0] * nb
        for j in range(nb):
            if av == b[j]:
                v = prev[j - 1] + 1 if j else 1
                cur[j] = v
                if v > best:
                    best, end_a, end_b = v, i, j
        prev = cur
    return best, end_a, end_b
