//! Letters, convolved symbols, and cube labels.
//!
//! A symbol of arity k is a k-tuple of letters from {0, 1, #}, packed two
//! bits per track into a u64. Edge labels are unions of *cubes*: one letter
//! set per track, three bits per track. Cubes intersect trackwise, so the
//! product constructions never enumerate the 3^k alphabet.

/// Hard bound on the number of tracks a symbol can carry (u64 packing).
pub const MAX_ARITY: usize = 16;

/// Alphabets of this size or smaller may be enumerated symbol by symbol.
/// 3^8 = 6561; beyond that only cube-algebra operations are available.
pub const MAX_ENUM_ARITY: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Letter {
    Zero = 0,
    One = 1,
    Hash = 2,
}

impl Letter {
    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            '0' => Some(Letter::Zero),
            '1' => Some(Letter::One),
            '#' => Some(Letter::Hash),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::Zero => '0',
            Letter::One => '1',
            Letter::Hash => '#',
        }
    }

    pub fn from_bit(b: bool) -> Letter {
        if b {
            Letter::One
        } else {
            Letter::Zero
        }
    }

    fn from_code(code: u64) -> Letter {
        match code {
            0 => Letter::Zero,
            1 => Letter::One,
            _ => Letter::Hash,
        }
    }
}

/// One position of a k-track word. Track t occupies bits 2t..2t+2.
/// Unused high tracks are zero, so equality is meaningful per arity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sym(u64);

impl Sym {
    pub fn from_letters(letters: &[Letter]) -> Sym {
        assert!(letters.len() <= MAX_ARITY);
        let mut packed = 0u64;
        for (t, &l) in letters.iter().enumerate() {
            packed |= (l as u64) << (2 * t);
        }
        Sym(packed)
    }

    pub fn letter(self, track: usize) -> Letter {
        Letter::from_code((self.0 >> (2 * track)) & 3)
    }

    pub fn letters(self, arity: usize) -> Vec<Letter> {
        (0..arity).map(|t| self.letter(t)).collect()
    }

    /// The all-# symbol: every track reads a block separator.
    pub fn hashes(arity: usize) -> Sym {
        Sym::from_letters(&vec![Letter::Hash; arity])
    }

    pub fn zeros(_arity: usize) -> Sym {
        Sym(0) // Letter::Zero packs as 0b00, so the all-zero symbol is just 0
    }

    pub fn render(self, arity: usize) -> String {
        (0..arity).map(|t| self.letter(t).to_char()).collect()
    }

    pub fn parse(s: &str) -> Option<Sym> {
        if s.len() > MAX_ARITY {
            return None;
        }
        let mut ls = Vec::with_capacity(s.len());
        for c in s.chars() {
            ls.push(Letter::from_char(c)?);
        }
        Some(Sym::from_letters(&ls))
    }
}

impl std::fmt::Debug for Sym {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Sym({:#x})", self.0)
    }
}

/// A rectangular set of symbols: an independent letter set per track,
/// three bits per track (bit 0 = letter 0, bit 1 = letter 1, bit 2 = #).
/// A cube with an empty track denotes the empty set and is never stored
/// inside a [`Label`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cube(u64);

pub const MASK_ZERO: u8 = 0b001;
pub const MASK_ONE: u8 = 0b010;
pub const MASK_HASH: u8 = 0b100;
pub const MASK_BITS: u8 = 0b011;
pub const MASK_ANY: u8 = 0b111;

impl Cube {
    /// All symbols of the given arity.
    pub fn full(arity: usize) -> Cube {
        assert!(arity <= MAX_ARITY);
        let mut c = 0u64;
        for t in 0..arity {
            c |= 0b111 << (3 * t);
        }
        Cube(c)
    }

    pub fn point(sym: Sym, arity: usize) -> Cube {
        let mut c = 0u64;
        for t in 0..arity {
            c |= 1u64 << (3 * t + sym.letter(t) as usize);
        }
        Cube(c)
    }

    pub fn of_masks(masks: &[u8]) -> Cube {
        assert!(masks.len() <= MAX_ARITY);
        let mut c = 0u64;
        for (t, &m) in masks.iter().enumerate() {
            debug_assert!(m != 0 && m <= 0b111);
            c |= (m as u64) << (3 * t);
        }
        Cube(c)
    }

    pub fn mask(self, track: usize) -> u8 {
        ((self.0 >> (3 * track)) & 0b111) as u8
    }

    pub fn with_mask(self, track: usize, m: u8) -> Cube {
        let cleared = self.0 & !(0b111u64 << (3 * track));
        Cube(cleared | ((m as u64) << (3 * track)))
    }

    /// None when some track has no letters left.
    pub fn intersect(self, other: Cube, arity: usize) -> Option<Cube> {
        let c = Cube(self.0 & other.0);
        for t in 0..arity {
            if c.mask(t) == 0 {
                return None;
            }
        }
        Some(c)
    }

    pub fn contains(self, sym: Sym, arity: usize) -> bool {
        for t in 0..arity {
            if self.mask(t) & (1 << (sym.letter(t) as u8)) == 0 {
                return false;
            }
        }
        true
    }

    pub fn is_subset_of(self, other: Cube) -> bool {
        self.0 & other.0 == self.0
    }

    pub fn count(self, arity: usize) -> u64 {
        let mut n = 1u64;
        for t in 0..arity {
            n *= self.mask(t).count_ones() as u64;
        }
        n
    }

    /// The Ord-least symbol of the cube (least letter on every track).
    pub fn min_sym(self, arity: usize) -> Sym {
        let mut packed = 0u64;
        for t in 0..arity {
            let code = self.mask(t).trailing_zeros() as u64;
            packed |= code << (2 * t);
        }
        Sym(packed)
    }

    pub fn drop_track(self, track: usize, arity: usize) -> Cube {
        debug_assert!(track < arity);
        let low = self.0 & ((1u64 << (3 * track)) - 1);
        let high = self.0 >> (3 * (track + 1));
        Cube(low | (high << (3 * track)))
    }

    /// Insert a new track at `track`, shifting higher tracks up.
    pub fn insert_track(self, track: usize, m: u8, arity: usize) -> Cube {
        debug_assert!(track <= arity && arity < MAX_ARITY);
        let low = self.0 & ((1u64 << (3 * track)) - 1);
        let high = (self.0 >> (3 * track)) << (3 * (track + 1));
        Cube(low | high | ((m as u64) << (3 * track)))
    }

    /// Move the tracks of a cube of arity `arity` to positions given by
    /// `dest` (injective); new tracks not hit by `dest` allow any letter.
    pub fn rearranged(self, dest: &[usize], arity: usize, new_arity: usize) -> Cube {
        debug_assert_eq!(dest.len(), arity);
        let mut c = Cube::full(new_arity);
        for (t, &d) in dest.iter().enumerate() {
            c = c.with_mask(d, self.mask(t));
        }
        c
    }

    pub fn syms(self, arity: usize) -> Vec<Sym> {
        let mut out = Vec::with_capacity(self.count(arity) as usize);
        let mut cur = vec![0u8; arity]; // index into each track's letter list
        let letters: Vec<Vec<Letter>> = (0..arity)
            .map(|t| {
                (0u8..3)
                    .filter(|l| self.mask(t) & (1 << l) != 0)
                    .map(|l| Letter::from_code(l as u64))
                    .collect()
            })
            .collect();
        loop {
            let ls: Vec<Letter> = (0..arity).map(|t| letters[t][cur[t] as usize]).collect();
            out.push(Sym::from_letters(&ls));
            // odometer, track 0 fastest
            let mut t = 0;
            loop {
                if t == arity {
                    out.sort();
                    return out;
                }
                cur[t] += 1;
                if (cur[t] as usize) < letters[t].len() {
                    break;
                }
                cur[t] = 0;
                t += 1;
            }
        }
    }

    /// Disjoint decomposition of self \ other.
    fn subtract(self, other: Cube, arity: usize) -> Vec<Cube> {
        if self.intersect(other, arity).is_none() {
            return vec![self];
        }
        let mut out = Vec::new();
        let mut prefix = self;
        for t in 0..arity {
            let keep = self.mask(t) & !other.mask(t);
            if keep != 0 {
                out.push(prefix.with_mask(t, keep));
            }
            let shared = self.mask(t) & other.mask(t);
            if shared == 0 {
                return out; // disjoint after all (defensive; handled above)
            }
            prefix = prefix.with_mask(t, shared);
        }
        out
    }
}

impl std::fmt::Debug for Cube {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cube({:#o})", self.0)
    }
}

/// An edge label: a union of cubes. Kept sorted and subset-free; cubes may
/// still overlap (semantics is the union).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Label {
    cubes: Vec<Cube>,
}

impl Label {
    pub fn empty() -> Label {
        Label { cubes: Vec::new() }
    }

    pub fn full(arity: usize) -> Label {
        Label {
            cubes: vec![Cube::full(arity)],
        }
    }

    pub fn of_cube(c: Cube) -> Label {
        Label { cubes: vec![c] }
    }

    pub fn of_cubes(cubes: Vec<Cube>) -> Label {
        let mut l = Label { cubes };
        l.normalize();
        l
    }

    pub fn point(sym: Sym, arity: usize) -> Label {
        Label::of_cube(Cube::point(sym, arity))
    }

    pub fn cubes(&self) -> &[Cube] {
        &self.cubes
    }

    pub fn is_empty(&self) -> bool {
        self.cubes.is_empty()
    }

    pub fn contains(&self, sym: Sym, arity: usize) -> bool {
        self.cubes.iter().any(|c| c.contains(sym, arity))
    }

    pub fn count(&self, arity: usize) -> u64 {
        // cubes may overlap; count exactly by disjointing
        let mut disjoint: Vec<Cube> = Vec::new();
        for &c in &self.cubes {
            let mut pieces = vec![c];
            for &d in &disjoint {
                let mut next = Vec::new();
                for p in pieces {
                    next.extend(p.subtract(d, arity));
                }
                pieces = next;
            }
            disjoint.extend(pieces);
        }
        disjoint.iter().map(|c| c.count(arity)).sum()
    }

    pub fn min_sym(&self, arity: usize) -> Option<Sym> {
        self.cubes.iter().map(|c| c.min_sym(arity)).min()
    }

    pub fn intersect(&self, other: &Label, arity: usize) -> Label {
        let mut cubes = Vec::new();
        for &a in &self.cubes {
            for &b in &other.cubes {
                if let Some(c) = a.intersect(b, arity) {
                    cubes.push(c);
                }
            }
        }
        Label::of_cubes(cubes)
    }

    pub fn union(&self, other: &Label) -> Label {
        let mut cubes = self.cubes.clone();
        cubes.extend_from_slice(&other.cubes);
        Label::of_cubes(cubes)
    }

    /// self \ other as a disjoint cube union.
    pub fn subtract(&self, other: &Label, arity: usize) -> Label {
        let mut pieces = self.cubes.clone();
        for &d in &other.cubes {
            let mut next = Vec::new();
            for p in pieces {
                next.extend(p.subtract(d, arity));
            }
            pieces = next;
        }
        Label::of_cubes(pieces)
    }

    /// Complement within the arity-k alphabet.
    pub fn complement(&self, arity: usize) -> Label {
        Label::full(arity).subtract(self, arity)
    }

    pub fn is_subset_of(&self, other: &Label, arity: usize) -> bool {
        self.subtract(other, arity).is_empty()
    }

    pub fn drop_track(&self, track: usize, arity: usize) -> Label {
        Label::of_cubes(
            self.cubes
                .iter()
                .map(|c| c.drop_track(track, arity))
                .collect(),
        )
    }

    pub fn insert_track(&self, track: usize, m: u8, arity: usize) -> Label {
        Label::of_cubes(
            self.cubes
                .iter()
                .map(|c| c.insert_track(track, m, arity))
                .collect(),
        )
    }

    pub fn rearranged(&self, dest: &[usize], arity: usize, new_arity: usize) -> Label {
        Label::of_cubes(
            self.cubes
                .iter()
                .map(|c| c.rearranged(dest, arity, new_arity))
                .collect(),
        )
    }

    pub fn syms(&self, arity: usize) -> Vec<Sym> {
        let mut out: Vec<Sym> = Vec::new();
        for &c in &self.cubes {
            out.extend(c.syms(arity));
        }
        out.sort();
        out.dedup();
        out
    }

    /// Smallest cube cover of an explicit symbol set, by recursive factoring:
    /// if the set is exactly the product of its per-track letter sets it is
    /// one cube, otherwise split on the first track with several letters.
    pub fn cover(syms: &[Sym], arity: usize) -> Label {
        fn go(syms: &[Sym], arity: usize, out: &mut Vec<Cube>) {
            if syms.is_empty() {
                return;
            }
            let mut masks = vec![0u8; arity];
            for s in syms {
                for (t, m) in masks.iter_mut().enumerate() {
                    *m |= 1 << (s.letter(t) as u8);
                }
            }
            let cand = Cube::of_masks(&masks);
            if cand.count(arity) == syms.len() as u64 {
                out.push(cand);
                return;
            }
            let split = (0..arity)
                .find(|&t| masks[t].count_ones() > 1)
                .expect("duplicate symbols in cover input");
            for l in 0u8..3 {
                if masks[split] & (1 << l) != 0 {
                    let part: Vec<Sym> = syms
                        .iter()
                        .copied()
                        .filter(|s| s.letter(split) as u8 == l)
                        .collect();
                    go(&part, arity, out);
                }
            }
        }
        let mut sorted: Vec<Sym> = syms.to_vec();
        sorted.sort();
        sorted.dedup();
        let mut cubes = Vec::new();
        go(&sorted, arity, &mut cubes);
        Label::of_cubes(cubes)
    }

    fn normalize(&mut self) {
        self.cubes.sort();
        self.cubes.dedup();
        // absorb cubes contained in others, then merge cube pairs that
        // differ in a single track; repeat to a fixpoint (labels are small)
        loop {
            let n = self.cubes.len();
            let mut keep = vec![true; n];
            for i in 0..n {
                if !keep[i] {
                    continue;
                }
                for j in 0..n {
                    if i != j && keep[j] && self.cubes[i].is_subset_of(self.cubes[j]) {
                        keep[i] = false;
                        break;
                    }
                }
            }
            let mut cubes: Vec<Cube> = self
                .cubes
                .iter()
                .zip(&keep)
                .filter(|(_, &k)| k)
                .map(|(&c, _)| c)
                .collect();
            let mut merged = false;
            'outer: for i in 0..cubes.len() {
                for j in (i + 1)..cubes.len() {
                    if let Some(m) = merge_single_track(cubes[i], cubes[j]) {
                        cubes[i] = m;
                        cubes.remove(j);
                        merged = true;
                        break 'outer;
                    }
                }
            }
            cubes.sort();
            let stable = !merged && cubes.len() == n;
            self.cubes = cubes;
            if stable {
                break;
            }
        }
    }
}

/// If two cubes agree on all tracks but one, their union is a cube.
fn merge_single_track(a: Cube, b: Cube) -> Option<Cube> {
    if a == b {
        return Some(a);
    }
    let mut diff_track = None;
    for t in 0..MAX_ARITY {
        if a.mask(t) != b.mask(t) {
            if diff_track.is_some() {
                return None;
            }
            diff_track = Some(t);
        }
    }
    let t = diff_track?;
    Some(a.with_mask(t, a.mask(t) | b.mask(t)))
}

/// All symbols of a small alphabet, in Ord order.
pub fn all_syms(arity: usize) -> Vec<Sym> {
    assert!(
        arity <= MAX_ENUM_ARITY,
        "alphabet of arity {arity} is too large to enumerate"
    );
    Cube::full(arity).syms(arity)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sym_pack_roundtrip() {
        let s = Sym::from_letters(&[Letter::Hash, Letter::Zero, Letter::One]);
        assert_eq!(s.letter(0), Letter::Hash);
        assert_eq!(s.letter(1), Letter::Zero);
        assert_eq!(s.letter(2), Letter::One);
        assert_eq!(s.render(3), "#01");
        assert_eq!(Sym::parse("#01"), Some(s));
    }

    #[test]
    fn cube_count_and_membership() {
        let c = Cube::of_masks(&[MASK_BITS, MASK_HASH]);
        assert_eq!(c.count(2), 2);
        assert!(c.contains(Sym::parse("0#").unwrap(), 2));
        assert!(c.contains(Sym::parse("1#").unwrap(), 2));
        assert!(!c.contains(Sym::parse("##").unwrap(), 2));
        assert_eq!(c.syms(2).len(), 2);
    }

    #[test]
    fn label_complement_partitions_alphabet() {
        let l = Label::of_cubes(vec![
            Cube::of_masks(&[MASK_ZERO, MASK_ANY]),
            Cube::of_masks(&[MASK_ANY, MASK_HASH]),
        ]);
        let co = l.complement(2);
        for s in all_syms(2) {
            assert!(l.contains(s, 2) != co.contains(s, 2), "sym {}", s.render(2));
        }
        assert_eq!(l.count(2) + co.count(2), 9);
    }

    #[test]
    fn cover_factors_products() {
        // {00, 01, 10, 11} over two tracks is a single cube
        let syms: Vec<Sym> = ["00", "01", "10", "11"]
            .iter()
            .map(|s| Sym::parse(s).unwrap())
            .collect();
        let l = Label::cover(&syms, 2);
        assert_eq!(l.cubes().len(), 1);
        // {00, 11} is not
        let l2 = Label::cover(&[syms[0], syms[3]], 2);
        assert_eq!(l2.count(2), 2);
        assert!(l2.cubes().len() == 2);
    }

    #[test]
    fn rearrange_moves_tracks() {
        let c = Cube::of_masks(&[MASK_ZERO, MASK_HASH]);
        let r = c.rearranged(&[2, 0], 2, 3);
        assert_eq!(r.mask(0), MASK_HASH);
        assert_eq!(r.mask(1), MASK_ANY);
        assert_eq!(r.mask(2), MASK_ZERO);
    }
}
