//! Ultimately periodic words: the finite witnesses of ω-languages.

use crate::automaton::Buchi;
use crate::sym::{Label, Sym};

/// stem · cycle^ω over k tracks. The cycle is nonempty.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UpWord {
    arity: usize,
    stem: Vec<Sym>,
    cycle: Vec<Sym>,
}

impl UpWord {
    pub fn new(arity: usize, stem: Vec<Sym>, cycle: Vec<Sym>) -> UpWord {
        assert!(!cycle.is_empty(), "lasso cycle must be nonempty");
        UpWord { arity, stem, cycle }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn stem(&self) -> &[Sym] {
        &self.stem
    }

    pub fn cycle(&self) -> &[Sym] {
        &self.cycle
    }

    pub fn at(&self, i: usize) -> Sym {
        if i < self.stem.len() {
            self.stem[i]
        } else {
            self.cycle[(i - self.stem.len()) % self.cycle.len()]
        }
    }

    /// The single-run automaton of this word; every state accepting.
    pub fn automaton(&self) -> Buchi {
        let sl = self.stem.len() as u32;
        let cl = self.cycle.len() as u32;
        let n = sl + cl;
        let mut edges = Vec::with_capacity(n as usize);
        for (i, &sym) in self.stem.iter().enumerate() {
            edges.push((i as u32, i as u32 + 1, Label::point(sym, self.arity)));
        }
        for (i, &sym) in self.cycle.iter().enumerate() {
            let src = sl + i as u32;
            let dst = if i as u32 + 1 == cl { sl } else { src + 1 };
            edges.push((src, dst, Label::point(sym, self.arity)));
        }
        Buchi::new(self.arity, n, vec![0], 0..n, edges)
    }

    /// Extract a single track as a one-track word.
    pub fn track(&self, t: usize) -> UpWord {
        let pick = |s: &Sym| Sym::from_letters(&[s.letter(t)]);
        UpWord::new(
            1,
            self.stem.iter().map(pick).collect(),
            self.cycle.iter().map(pick).collect(),
        )
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for sym in &self.stem {
            s.push_str(&sym.render(self.arity));
            s.push('|');
        }
        s.push('(');
        for sym in &self.cycle {
            s.push_str(&sym.render(self.arity));
            s.push('|');
        }
        s.pop();
        s.push_str(")^w");
        s
    }
}

/// Zip one-track words into a multi-track word. All inputs must have equal
/// stem lengths and equal cycle lengths (pad/unroll beforehand).
pub fn convolve(tracks: &[UpWord]) -> UpWord {
    assert!(!tracks.is_empty());
    let sl = tracks[0].stem.len();
    let cl = tracks[0].cycle.len();
    assert!(
        tracks.iter().all(|t| t.arity == 1
            && t.stem.len() == sl
            && t.cycle.len() == cl),
        "convolve inputs must be single-track and length-aligned"
    );
    let zip = |i: usize, from_cycle: bool| {
        let letters: Vec<_> = tracks
            .iter()
            .map(|t| {
                if from_cycle {
                    t.cycle[i].letter(0)
                } else {
                    t.stem[i].letter(0)
                }
            })
            .collect();
        Sym::from_letters(&letters)
    };
    UpWord::new(
        tracks.len(),
        (0..sl).map(|i| zip(i, false)).collect(),
        (0..cl).map(|i| zip(i, true)).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sym::Letter;

    fn w(s: &str) -> Vec<Sym> {
        s.chars()
            .map(|c| Sym::from_letters(&[Letter::from_char(c).unwrap()]))
            .collect()
    }

    #[test]
    fn indexing_wraps_into_cycle() {
        let u = UpWord::new(1, w("#1"), w("#01"));
        assert_eq!(u.at(0).letter(0), Letter::Hash);
        assert_eq!(u.at(1).letter(0), Letter::One);
        assert_eq!(u.at(2).letter(0), Letter::Hash);
        assert_eq!(u.at(5).letter(0), Letter::Hash);
        assert_eq!(u.at(6).letter(0), Letter::Zero);
    }

    #[test]
    fn convolve_zips_tracks() {
        let a = UpWord::new(1, w("#1"), w("#1"));
        let b = UpWord::new(1, w("#0"), w("#1"));
        let c = convolve(&[a, b]);
        assert_eq!(c.arity(), 2);
        assert_eq!(c.at(1).render(2), "10");
        assert_eq!(c.at(3).render(2), "11");
    }
}
