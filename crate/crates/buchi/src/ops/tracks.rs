//! Track surgery: projection, cylindrification, rearrangement.

use crate::automaton::Buchi;
use crate::error::{BuchiError, Result};
use crate::sym::MAX_ARITY;

/// Erase one track. The projected language is the set of words obtained by
/// deleting that track from accepted words; callers working modulo the
/// block coding must re-close the result themselves.
pub fn project(a: &Buchi, track: usize) -> Result<Buchi> {
    a.check_track(track)?;
    let arity = a.arity();
    let edges = a
        .edges()
        .iter()
        .map(|e| (e.src, e.dst, e.label.drop_track(track, arity)))
        .collect();
    Ok(Buchi::new(
        arity - 1,
        a.state_count(),
        a.initial().to_vec(),
        a.accepting_states(),
        edges,
    ))
}

/// Insert an unconstrained track at `position` (0..=arity).
pub fn cylinder(a: &Buchi, position: usize) -> Result<Buchi> {
    let arity = a.arity();
    if position > arity {
        return Err(BuchiError::TrackOutOfRange {
            track: position,
            arity: arity + 1,
        });
    }
    if arity + 1 > MAX_ARITY {
        return Err(BuchiError::AlphabetTooLarge { arity: arity + 1 });
    }
    let edges = a
        .edges()
        .iter()
        .map(|e| {
            (
                e.src,
                e.dst,
                e.label.insert_track(position, crate::sym::MASK_ANY, arity),
            )
        })
        .collect();
    Ok(Buchi::new(
        arity + 1,
        a.state_count(),
        a.initial().to_vec(),
        a.accepting_states(),
        edges,
    ))
}

/// Send old track i to new track dest[i] (injective); tracks of the new
/// arity not hit by `dest` are unconstrained. Subsumes permutation and
/// multi-cylindrification in one relabeling pass.
pub fn rearrange(a: &Buchi, dest: &[usize], new_arity: usize) -> Result<Buchi> {
    if dest.len() != a.arity() {
        return Err(BuchiError::ArityMismatch {
            left: dest.len(),
            right: a.arity(),
        });
    }
    if new_arity > MAX_ARITY {
        return Err(BuchiError::AlphabetTooLarge { arity: new_arity });
    }
    let mut seen = vec![false; new_arity];
    for &d in dest {
        if d >= new_arity {
            return Err(BuchiError::TrackOutOfRange {
                track: d,
                arity: new_arity,
            });
        }
        assert!(!seen[d], "rearrange destinations must be injective");
        seen[d] = true;
    }
    let arity = a.arity();
    let edges = a
        .edges()
        .iter()
        .map(|e| (e.src, e.dst, e.label.rearranged(dest, arity, new_arity)))
        .collect();
    Ok(Buchi::new(
        new_arity,
        a.state_count(),
        a.initial().to_vec(),
        a.accepting_states(),
        edges,
    ))
}

/// Swap/permute tracks: `perm[i]` is the new position of old track i.
pub fn permute(a: &Buchi, perm: &[usize]) -> Result<Buchi> {
    rearrange(a, perm, a.arity())
}
