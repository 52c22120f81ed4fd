//! Construction of ultimately periodic `{0,1,#}` words from block values.
//!
//! A coded word is a sequence of blocks `# b₀b₁…b_{w-1}`, each block holding
//! one nonnegative integer least-significant-bit first. Multi-track words
//! share their `#` positions, so all tracks of one column belong to the same
//! block index; the width of a block is the maximum bit length needed by any
//! track at that position.

use buchi::{Letter, Sym, UpWord};

/// Block values of one track of an ultimately periodic word: `stem` blocks
/// followed by `cycle` blocks repeating forever.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSeq {
    pub stem: Vec<u64>,
    pub cycle: Vec<u64>,
}

impl BlockSeq {
    pub fn new(stem: &[u64], cycle: &[u64]) -> BlockSeq {
        assert!(!cycle.is_empty(), "cycle must be nonempty");
        BlockSeq {
            stem: stem.to_vec(),
            cycle: cycle.to_vec(),
        }
    }

    /// Finite digit support padded with an all-zero cycle.
    pub fn finite(stem: &[u64]) -> BlockSeq {
        BlockSeq::new(stem, &[0])
    }

    pub fn block(&self, i: usize) -> u64 {
        if i < self.stem.len() {
            self.stem[i]
        } else {
            self.cycle[(i - self.stem.len()) % self.cycle.len()]
        }
    }

    /// Same sequence reshaped to the given stem length and cycle length.
    /// `stem_len` must be ≥ the current stem length and `cycle_len` a
    /// multiple of the current cycle length.
    fn reshape(&self, stem_len: usize, cycle_len: usize) -> BlockSeq {
        debug_assert!(stem_len >= self.stem.len());
        debug_assert!(cycle_len % self.cycle.len() == 0);
        let stem: Vec<u64> = (0..stem_len).map(|i| self.block(i)).collect();
        let cycle: Vec<u64> = (0..cycle_len).map(|i| self.block(stem_len + i)).collect();
        BlockSeq { stem, cycle }
    }
}

fn bitlen(v: u64) -> usize {
    (64 - v.leading_zeros() as usize).max(1)
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Convolve per-track block sequences into one aligned lasso word. Each
/// block is written `#` plus exactly as many bit columns as the widest
/// value at that position needs (plus `extra_pad` trailing zero columns,
/// for exercising padding invariance).
pub fn convolve_blocks(tracks: &[BlockSeq], extra_pad: usize) -> UpWord {
    assert!(!tracks.is_empty());
    let stem_len = tracks.iter().map(|t| t.stem.len()).max().unwrap();
    let cycle_len = tracks
        .iter()
        .fold(1usize, |l, t| lcm(l, t.cycle.len()));
    let shaped: Vec<BlockSeq> = tracks
        .iter()
        .map(|t| t.reshape(stem_len, cycle_len))
        .collect();
    let arity = tracks.len();
    let emit = |blocks: &[Vec<u64>], out: &mut Vec<Sym>| {
        let n = blocks[0].len();
        for i in 0..n {
            out.push(Sym::hashes(arity));
            let width = blocks
                .iter()
                .map(|b| bitlen(b[i]))
                .max()
                .unwrap()
                + extra_pad;
            for bit in 0..width {
                let letters: Vec<Letter> = blocks
                    .iter()
                    .map(|b| Letter::from_bit(b[i] >> bit & 1 == 1))
                    .collect();
                out.push(Sym::from_letters(&letters));
            }
        }
    };
    let stems: Vec<Vec<u64>> = shaped.iter().map(|t| t.stem.clone()).collect();
    let cycles: Vec<Vec<u64>> = shaped.iter().map(|t| t.cycle.clone()).collect();
    let mut stem = Vec::new();
    let mut cycle = Vec::new();
    emit(&stems, &mut stem);
    emit(&cycles, &mut cycle);
    UpWord::new(arity, stem, cycle)
}

/// Single-track coded word for a continued fraction `[0; prefix, cycle…]`.
pub fn slope_word(prefix: &[u64], period: &[u64]) -> UpWord {
    convolve_blocks(&[BlockSeq::new(prefix, period)], 0)
}
