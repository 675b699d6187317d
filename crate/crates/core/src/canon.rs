//! Canonical adjacency-mask machinery shared by `Graph::canonical_form` and
//! the small-graph enumerators.
//!
//! A graph on n vertices is encoded as a bitmask over the upper-triangle
//! slots x(0,1), x(0,2), x(1,2), x(0,3), ... (the graph6 bit order). The
//! canonical mask is the minimum over all vertex permutations when the slot
//! string is read slot 0 first. The search fills permutation positions left
//! to right and prunes on completed columns, which is exact and fast enough
//! for the n <= 9 range used here.

pub(crate) const MAX_N: usize = 11; // slot_count(11) = 55 fits in u64

pub(crate) fn slot_count(n: usize) -> usize {
    n * (n.saturating_sub(1)) / 2
}

pub(crate) fn slot_of(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

/// Per-vertex neighbor bitmasks (over vertices) for a slot mask.
fn neighbor_masks(n: usize, mask: u64) -> [u16; MAX_N] {
    debug_assert!(n <= MAX_N);
    let mut nbr = [0u16; MAX_N];
    let (mut u, mut v) = (0usize, 1usize);
    for s in 0..slot_count(n) {
        if mask >> s & 1 == 1 {
            nbr[u] |= 1 << v;
            nbr[v] |= 1 << u;
        }
        u += 1;
        if u == v {
            u = 0;
            v += 1;
        }
    }
    nbr
}

/// True iff the graph encoded by `mask` is connected on all `n` vertices.
pub(crate) fn mask_is_connected(n: usize, mask: u64) -> bool {
    if n == 0 {
        return false;
    }
    let nbr = neighbor_masks(n, mask);
    let mut seen: u16 = 1;
    let mut frontier: u16 = 1;
    while frontier != 0 {
        let mut next: u16 = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= nbr[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen.count_ones() as usize == n
}

// Slot strings are compared with slot 0 most significant, so packing slot s
// at bit 63 - s makes integer comparison equal string comparison.
fn pack_hi(mask: u64) -> u64 {
    mask.reverse_bits()
}

fn unpack_hi(hi: u64) -> u64 {
    hi.reverse_bits()
}

fn prefix_mask(filled: usize) -> u64 {
    if filled == 0 {
        0
    } else {
        !0u64 << (64 - filled)
    }
}

/// Minimum slot mask over all vertex permutations.
pub(crate) fn canon_mask(n: usize, mask: u64) -> u64 {
    debug_assert!(n <= MAX_N);
    if n < 2 {
        return 0;
    }
    let nbr = neighbor_masks(n, mask);
    let mut best = pack_hi(mask);
    let mut perm = [0usize; MAX_N];
    min_search(0, 0, 0, &mut perm, n, &nbr, &mut best);
    unpack_hi(best)
}

fn min_search(
    k: usize,
    used: u16,
    partial: u64,
    perm: &mut [usize; MAX_N],
    n: usize,
    nbr: &[u16; MAX_N],
    best: &mut u64,
) {
    if k == n {
        if partial < *best {
            *best = partial;
        }
        return;
    }
    let base = slot_count(k);
    for v in 0..n {
        if used >> v & 1 == 1 {
            continue;
        }
        let mut cand = partial;
        for (i, &p) in perm.iter().enumerate().take(k) {
            if nbr[v] >> p & 1 == 1 {
                cand |= 1u64 << (63 - (base + i));
            }
        }
        let pm = prefix_mask(base + k);
        if (cand & pm) > (*best & pm) {
            continue;
        }
        perm[k] = v;
        min_search(k + 1, used | 1 << v, cand, perm, n, nbr, best);
    }
}

/// True iff `mask` is its own canonical labeling (no permutation yields a
/// strictly smaller slot string). The enumerators keep exactly these
/// representatives, which is equivalent to deduplicating by canonical form.
pub(crate) fn is_canonical_mask(n: usize, mask: u64) -> bool {
    debug_assert!(n <= MAX_N);
    if n < 2 {
        return true;
    }
    let nbr = neighbor_masks(n, mask);
    let reference = pack_hi(mask);
    let mut perm = [0usize; MAX_N];
    no_smaller(0, 0, 0, &mut perm, n, &nbr, reference)
}

fn no_smaller(
    k: usize,
    used: u16,
    partial: u64,
    perm: &mut [usize; MAX_N],
    n: usize,
    nbr: &[u16; MAX_N],
    reference: u64,
) -> bool {
    if k == n {
        return true; // complete tie
    }
    let base = slot_count(k);
    for v in 0..n {
        if used >> v & 1 == 1 {
            continue;
        }
        let mut cand = partial;
        for (i, &p) in perm.iter().enumerate().take(k) {
            if nbr[v] >> p & 1 == 1 {
                cand |= 1u64 << (63 - (base + i));
            }
        }
        let pm = prefix_mask(base + k);
        let (c, r) = (cand & pm, reference & pm);
        if c > r {
            continue; // this branch only produces larger strings
        }
        if c < r {
            return false; // found a strictly smaller labeling
        }
        perm[k] = v;
        if !no_smaller(k + 1, used | 1 << v, cand, perm, n, nbr, reference) {
            return false;
        }
    }
    true
}
