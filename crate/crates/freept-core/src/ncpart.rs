//! Non-crossing partition combinatorics.
//!
//! - [`enumerate_nc`]: all of NC(p) in a canonical deterministic order
//!   (count = Catalan number C_p).
//! - [`kreweras_complement`]: the lattice anti-isomorphism K with
//!   |π| + |K(π)| = p + 1.
//! - [`ccw_check`] / [`count_ccw`]: the cyclic-coupling condition between
//!   a partition and the double-index tuple (i₂i₁, i₃i₂, …, i₁i_p), and
//!   the count N(π) = n^(e+1) where e is the number of even-sized blocks.
//!
//! Partitions are canonical: elements ascending inside each block, blocks
//! sorted by minimum element. Elements are 1-based, matching the ground
//! set {1..p}.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Largest ground-set size accepted by [`enumerate_nc`].
pub const DEFAULT_ENUM_MAX: usize = 12;

/// Cap on n^p for brute-force cyclic-coupling counts.
pub const BRUTE_FORCE_CAP: u64 = 10_000_000;

/// A set partition of {1..p} in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    p: usize,
    blocks: Vec<Vec<usize>>,
    noncrossing: bool,
}

impl Partition {
    /// Builds a partition from blocks, validating that they are nonempty,
    /// disjoint and cover {1..p}. Blocks are canonicalized.
    pub fn new(p: usize, blocks: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        if p == 0 {
            return Err(Error::domain("partition ground set must be nonempty"));
        }
        let mut blocks: Vec<Vec<usize>> = blocks.into_iter().collect();
        let mut seen = vec![false; p + 1];
        let mut total = 0usize;
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::domain("partition block is empty"));
            }
            block.sort_unstable();
            for &e in block.iter() {
                if e == 0 || e > p {
                    return Err(Error::domain(format!(
                        "element {e} outside ground set 1..={p}"
                    )));
                }
                if seen[e] {
                    return Err(Error::domain(format!("element {e} appears twice")));
                }
                seen[e] = true;
                total += 1;
            }
        }
        if total != p {
            return Err(Error::domain(format!(
                "blocks cover {total} of {p} elements"
            )));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        let noncrossing = crossing_free(p, &blocks);
        Ok(Partition {
            p,
            blocks,
            noncrossing,
        })
    }

    /// The one-block partition 1_p.
    pub fn full(p: usize) -> Result<Self> {
        Self::new(p, [(1..=p).collect::<Vec<_>>()])
    }

    /// The all-singletons partition 0_p.
    pub fn singletons(p: usize) -> Result<Self> {
        Self::new(p, (1..=p).map(|e| vec![e]))
    }

    pub fn ground_size(&self) -> usize {
        self.p
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// |π|, the number of blocks.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_noncrossing(&self) -> bool {
        self.noncrossing
    }

    /// Number of blocks of even cardinality (the exponent in N(π) = n^(e+1)).
    pub fn even_blocks(&self) -> usize {
        self.blocks.iter().filter(|b| b.len() % 2 == 0).count()
    }

    /// Image of the partition under the cyclic shift i ↦ i−1 (1 ↦ p),
    /// the direction in which the squared Kreweras complement rotates.
    pub fn rotate(&self) -> Partition {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&e| (e + self.p - 2) % self.p + 1).collect())
            .collect::<Vec<Vec<usize>>>();
        Partition::new(self.p, blocks).expect("rotation preserves partition axioms")
    }
}

impl core::fmt::Display for Partition {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{{")?;
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (j, e) in block.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

/// Index tuple (i_1..i_p) with entries in {1..n}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexTuple {
    n: usize,
    indices: Vec<usize>,
}

impl IndexTuple {
    pub fn new(n: usize, indices: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("index alphabet must be nonempty"));
        }
        if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::domain(format!("index {bad} outside 1..={n}")));
        }
        Ok(IndexTuple { n, indices })
    }

    pub fn alphabet_size(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// Scan-based crossing test: no a<b<c<d with a,c in one block and b,d in
/// another. Blocks must be canonical (sorted, ordered by minimum).
fn crossing_free(p: usize, blocks: &[Vec<usize>]) -> bool {
    // word[e] = id of the block containing element e
    let mut word = vec![0usize; p + 1];
    let mut last = vec![0usize; blocks.len()];
    for (id, block) in blocks.iter().enumerate() {
        for &e in block {
            word[e] = id;
        }
        last[id] = *block.last().expect("blocks are nonempty");
    }
    let mut stack: Vec<usize> = Vec::new();
    let mut opened = vec![false; blocks.len()];
    for e in 1..=p {
        let b = word[e];
        if !opened[b] {
            opened[b] = true;
            stack.push(b);
        } else if stack.last() != Some(&b) {
            return false;
        }
        if last[b] == e {
            stack.pop();
        }
    }
    true
}

/// All non-crossing partitions of {1..p}, canonically ordered
/// (lexicographic on the canonical block lists).
///
/// The generation recurses on the block of the smallest element, whose
/// members split the rest into independent intervals, so only NC
/// partitions are ever produced (C_p of them, never Bell(p)).
pub fn enumerate_nc(p: usize) -> Result<Vec<Partition>> {
    enumerate_nc_capped(p, DEFAULT_ENUM_MAX)
}

/// [`enumerate_nc`] with an explicit size cap.
pub fn enumerate_nc_capped(p: usize, cap: usize) -> Result<Vec<Partition>> {
    if p == 0 {
        return Err(Error::domain("p must be positive"));
    }
    if p > cap {
        return Err(Error::domain(format!("p = {p} exceeds enumeration cap {cap}")));
    }
    let mut out = Vec::new();
    let elems: Vec<usize> = (1..=p).collect();
    gen_nc(&elems, &mut out);
    let mut parts: Vec<Partition> = out
        .into_iter()
        .map(|blocks| {
            let mut blocks = blocks;
            blocks.sort_unstable_by_key(|b: &Vec<usize>| b[0]);
            Partition {
                p,
                blocks,
                noncrossing: true,
            }
        })
        .collect();
    parts.sort_unstable();
    Ok(parts)
}

/// Emits every NC partition of `elems` (ascending slice) exactly once.
fn gen_nc(elems: &[usize], out: &mut Vec<Vec<Vec<usize>>>) {
    if elems.is_empty() {
        out.push(Vec::new());
        return;
    }
    let mut first_block = vec![elems[0]];
    let mut gap_parts: Vec<Vec<Vec<usize>>> = Vec::new();
    extend_first_block(elems, 0, &mut first_block, &mut gap_parts, out);
}

/// `last` is the position (in `elems`) of the newest member of the block
/// under construction. Either close the block (the tail becomes one gap)
/// or adopt a later element, recursing on the skipped gap.
fn extend_first_block(
    elems: &[usize],
    last: usize,
    block: &mut Vec<usize>,
    gaps: &mut Vec<Vec<Vec<usize>>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    let m = elems.len();
    // close: partition the tail independently
    let mut tail_parts = Vec::new();
    gen_nc(&elems[last + 1..], &mut tail_parts);
    for tail in tail_parts {
        let mut blocks = Vec::with_capacity(1 + gaps.len() + tail.len());
        blocks.push(block.clone());
        for g in gaps.iter() {
            blocks.extend(g.iter().cloned());
        }
        blocks.extend(tail);
        out.push(blocks);
    }
    // extend: pick the next member, the skipped range becomes a gap
    for next in last + 1..m {
        let mut gap_parts = Vec::new();
        gen_nc(&elems[last + 1..next], &mut gap_parts);
        block.push(elems[next]);
        for gp in gap_parts {
            gaps.push(gp);
            extend_first_block(elems, next, block, gaps, out);
            gaps.pop();
        }
        block.pop();
    }
}

/// Validates a partition given as raw blocks and reports whether it is
/// non-crossing.
pub fn is_noncrossing(p: usize, blocks: impl IntoIterator<Item = Vec<usize>>) -> Result<bool> {
    Ok(Partition::new(p, blocks)?.is_noncrossing())
}

/// Kreweras complement of a non-crossing partition: the maximal σ on the
/// primed copies such that π ∪ σ stays non-crossing on the interleaved
/// set 1,1',2,2',…,p,p'.
///
/// Computed as the cycle decomposition of x ↦ π⁻¹(x mod p + 1) where π
/// acts as the permutation with each block an ascending cycle; the brute
/// maximality characterization is exercised in tests.
pub fn kreweras_complement(part: &Partition) -> Result<Partition> {
    if !part.is_noncrossing() {
        return Err(Error::domain("Kreweras complement needs a non-crossing partition"));
    }
    let p = part.p;
    // inv[v_{j+1}] = v_j cyclically within each block
    let mut inv = vec![0usize; p + 1];
    for block in &part.blocks {
        let s = block.len();
        for j in 0..s {
            inv[block[(j + 1) % s]] = block[j];
        }
    }
    let mut assigned = vec![false; p + 1];
    let mut blocks = Vec::new();
    for start in 1..=p {
        if assigned[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        loop {
            assigned[x] = true;
            cycle.push(x);
            x = inv[x % p + 1];
            if x == start {
                break;
            }
        }
        blocks.push(cycle);
    }
    Partition::new(p, blocks)
}

/// Whether π couples the Theorem-5.4 double-index tuple built from `t`
/// in a cyclic way: for every block (l_1<…<l_s), the second index of
/// entry l_k equals the first index of entry l_{k+1}, cyclically. Entry
/// l carries the pair (i_{l+1}, i_l) with subscripts mod p.
pub fn ccw_check(part: &Partition, tuple: &IndexTuple) -> Result<bool> {
    if tuple.len() != part.p {
        return Err(Error::domain(format!(
            "index tuple length {} does not match ground set {}",
            tuple.len(),
            part.p
        )));
    }
    Ok(ccw_holds(part, tuple.indices()))
}

/// Core of [`ccw_check`] on a raw 1-based index slice of length p.
fn ccw_holds(part: &Partition, idx: &[usize]) -> bool {
    let p = part.p;
    for block in &part.blocks {
        let s = block.len();
        for k in 0..s {
            let l_k = block[k];
            let l_next = block[(k + 1) % s];
            // second index of entry l_k is i_{l_k}; first index of entry
            // l_{k+1} is i_{l_{k+1}+1} (cyclically)
            if idx[l_k - 1] != idx[l_next % p] {
                return false;
            }
        }
    }
    true
}

/// Execution mode for [`count_ccw`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMode {
    /// Exhaustive loop over all n^p tuples; capped at [`BRUTE_FORCE_CAP`].
    BruteForce,
    /// Closed form n^(evenBlocks+1).
    Closed,
}

/// N(π): the number of tuples (i_1..i_p) in {1..n}^p coupled cyclically
/// by π. Both modes agree wherever brute force is feasible.
pub fn count_ccw(part: &Partition, n: usize, mode: CountMode) -> Result<BigUint> {
    if !part.is_noncrossing() {
        return Err(Error::domain("cyclic-coupling count needs a non-crossing partition"));
    }
    if n == 0 {
        return Err(Error::domain("index alphabet must be nonempty"));
    }
    match mode {
        CountMode::Closed => {
            let exp = part.even_blocks() as u32 + 1;
            Ok(BigUint::from(n).pow(exp))
        }
        CountMode::BruteForce => {
            let p = part.p;
            let mut size = 1u64;
            for _ in 0..p {
                size = size.saturating_mul(n as u64);
                if size > BRUTE_FORCE_CAP {
                    return Err(Error::resource(format!(
                        "brute-force space n^p = {n}^{p} exceeds cap {BRUTE_FORCE_CAP}"
                    )));
                }
            }
            let mut idx = vec![1usize; p];
            let mut count: u64 = 0;
            loop {
                if ccw_holds(part, &idx) {
                    count += 1;
                }
                // odometer increment
                let mut pos = 0;
                while pos < p {
                    if idx[pos] < n {
                        idx[pos] += 1;
                        break;
                    }
                    idx[pos] = 1;
                    pos += 1;
                }
                if pos == p {
                    break;
                }
            }
            Ok(BigUint::from(count))
        }
    }
}

/// Catalan numbers by the convolution recurrence C_0 = 1,
/// C_{k+1} = Σ C_i C_{k-i}.
pub fn catalan(p: usize) -> BigUint {
    let mut c = vec![BigUint::from(1u32)];
    for k in 0..p {
        let mut next = BigUint::from(0u32);
        for i in 0..=k {
            next += &c[i] * &c[k - i];
        }
        c.push(next);
    }
    c[p].clone()
}
