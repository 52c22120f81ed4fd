//! Recovery of block values from accepted lasso words.
//!
//! Emptiness witnesses come back as arbitrary lassos; to report them we cut
//! the lasso at block boundaries and read each track's blocks back as
//! integers. The cycle of any accepted word contains at least one `#`
//! column (every coded word has infinitely many), so a boundary-aligned
//! reparse always exists.

use crate::error::{Result, SturmError};
use crate::words::BlockSeq;
use buchi::{Letter, UpWord};

/// Per-track block values of an aligned lasso word. All tracks share the
/// same stem block count and cycle block count.
pub fn split_blocks(w: &UpWord) -> Result<Vec<BlockSeq>> {
    let k = w.arity();
    let sl = w.stem().len();
    let cl = w.cycle().len();
    let is_hash_col = |i: usize| -> Result<bool> {
        let sym = w.at(i);
        let hashes = (0..k).filter(|&t| sym.letter(t) == Letter::Hash).count();
        if hashes != 0 && hashes != k {
            return Err(SturmError::invalid(format!(
                "misaligned column {i}: partial # column"
            )));
        }
        Ok(hashes == k)
    };
    // first # column at or after the stem; it exists in any aligned word
    let p0 = (sl..sl + cl)
        .find_map(|i| match is_hash_col(i) {
            Ok(true) => Some(Ok(i)),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        })
        .transpose()?
        .ok_or_else(|| SturmError::invalid("lasso cycle has no # column"))?;

    // columns [0, p0) form whole stem blocks; [p0, p0+cl) one whole cycle
    let parse = |from: usize, to: usize| -> Result<Vec<Vec<u64>>> {
        let mut blocks: Vec<Vec<u64>> = vec![Vec::new(); k];
        let mut widths: Vec<usize> = Vec::new();
        let mut i = from;
        while i < to {
            if !is_hash_col(i)? {
                return Err(SturmError::invalid(format!(
                    "column {i}: expected # at block boundary"
                )));
            }
            let mut bit = 0usize;
            i += 1;
            let mut vals = vec![0u64; k];
            while i < to && !is_hash_col(i)? {
                if bit >= 63 {
                    return Err(SturmError::invalid("block wider than 63 bits"));
                }
                let sym = w.at(i);
                for (t, v) in vals.iter_mut().enumerate() {
                    if sym.letter(t) == Letter::One {
                        *v |= 1 << bit;
                    }
                }
                bit += 1;
                i += 1;
            }
            widths.push(bit);
            for (t, v) in vals.into_iter().enumerate() {
                blocks[t].push(v);
            }
        }
        Ok(blocks)
    };

    let stems = parse(0, p0)?;
    let cycles = parse(p0, p0 + cl)?;
    if cycles[0].is_empty() {
        return Err(SturmError::invalid("cycle contains no complete block"));
    }
    Ok((0..k)
        .map(|t| BlockSeq {
            stem: stems[t].clone(),
            cycle: cycles[t].clone(),
        })
        .collect())
}

/// Continued-fraction rendering: `[6][3]([1])^ω`.
pub fn format_cf(b: &BlockSeq) -> String {
    let mut s = String::new();
    for v in &b.stem {
        s.push_str(&format!("[{v}]"));
    }
    s.push('(');
    for v in &b.cycle {
        s.push_str(&format!("[{v}]"));
    }
    s.push_str(")^ω");
    s
}

/// Digit-sequence rendering: `0,1 (0)^ω`.
pub fn format_digits(b: &BlockSeq) -> String {
    let stem = b
        .stem
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",");
    let cycle = b
        .cycle
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",");
    if stem.is_empty() {
        format!("({cycle})^ω")
    } else {
        format!("{stem} ({cycle})^ω")
    }
}

/// The value of a finite-support digit track, if its cycle is all zero:
/// `Σ digit_i · q_{i-1}` evaluation is left to callers with a slope at
/// hand; this only flattens the digits.
pub fn finite_digits(b: &BlockSeq) -> Option<Vec<u64>> {
    if b.cycle.iter().any(|&v| v != 0) {
        return None;
    }
    let mut d = b.stem.clone();
    while d.last() == Some(&0) {
        d.pop();
    }
    Some(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::convolve_blocks;

    #[test]
    fn roundtrip() {
        let tracks = [BlockSeq::new(&[6, 3], &[1]), BlockSeq::finite(&[0, 1])];
        let w = convolve_blocks(&tracks, 1);
        let back = split_blocks(&w).unwrap();
        assert_eq!(back[0].stem, vec![6, 3]);
        assert_eq!(back[0].cycle, vec![1]);
        assert_eq!(back[1].stem, vec![0, 1]);
        assert_eq!(finite_digits(&back[1]), Some(vec![0, 1]));
        assert_eq!(format_cf(&back[0]), "[6][3]([1])^ω");
    }
}
