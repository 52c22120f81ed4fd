//! Plain-text automaton exchange format.
//!
//! ```text
//! arity 2 states 3
//! initial 0
//! accepting 1 2
//! 0 0# 1
//! 0 1# 1
//! ...
//! ```
//!
//! One transition per line with an explicit symbol (track 0 first). Export
//! expands cube labels and sorts everything, so parse(print(a)) reproduces
//! the exact bytes of print(a).

use crate::automaton::{Buchi, State};
use crate::error::{BuchiError, Result};
use crate::sym::{Label, Sym, MAX_ARITY};
use std::fmt::Write as _;

pub fn print(a: &Buchi) -> String {
    let mut out = String::new();
    writeln!(out, "arity {} states {}", a.arity(), a.state_count()).unwrap();
    let initial: Vec<String> = a.initial().iter().map(|s| s.to_string()).collect();
    writeln!(out, "initial {}", initial.join(" ")).unwrap();
    let acc: Vec<String> = a.accepting_states().map(|s| s.to_string()).collect();
    writeln!(out, "accepting {}", acc.join(" ")).unwrap();
    let mut lines: Vec<(State, Sym, State)> = Vec::new();
    for e in a.edges() {
        for sym in e.label.syms(a.arity()) {
            lines.push((e.src, sym, e.dst));
        }
    }
    lines.sort();
    for (src, sym, dst) in lines {
        writeln!(out, "{} {} {}", src, sym.render(a.arity()), dst).unwrap();
    }
    out
}

fn fail<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(BuchiError::Parse {
        line,
        msg: msg.into(),
    })
}

pub fn parse(text: &str) -> Result<Buchi> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with("//"));

    let (ln, header) = match lines.next() {
        Some(x) => x,
        None => return fail(1, "empty automaton file"),
    };
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 4 || toks[0] != "arity" || toks[2] != "states" {
        return fail(ln, "expected header `arity K states N`");
    }
    let arity: usize = match toks[1].parse() {
        Ok(k) if k >= 1 && k <= MAX_ARITY => k,
        _ => return fail(ln, format!("arity must be in 1..={MAX_ARITY}")),
    };
    let n: u32 = match toks[3].parse() {
        Ok(n) => n,
        Err(_) => return fail(ln, "bad state count"),
    };

    let parse_states = |ln: usize, line: &str, keyword: &str| -> Result<Vec<State>> {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.first() != Some(&keyword) {
            return fail(ln, format!("expected `{keyword}` line"));
        }
        let mut out = Vec::new();
        for t in &toks[1..] {
            match t.parse::<u32>() {
                Ok(s) if s < n => out.push(s),
                Ok(s) => return fail(ln, format!("state {s} out of range (states {n})")),
                Err(_) => return fail(ln, format!("bad state id `{t}`")),
            }
        }
        Ok(out)
    };

    let (ln_i, line_i) = match lines.next() {
        Some(x) => x,
        None => return fail(ln + 1, "missing `initial` line"),
    };
    let initial = parse_states(ln_i, line_i, "initial")?;
    let (ln_a, line_a) = match lines.next() {
        Some(x) => x,
        None => return fail(ln_i + 1, "missing `accepting` line"),
    };
    let accepting = parse_states(ln_a, line_a, "accepting")?;

    let mut edges: Vec<(State, State, Label)> = Vec::new();
    for (ln, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 {
            return fail(ln, "expected transition `src sym dst`");
        }
        let src: u32 = match toks[0].parse() {
            Ok(s) if s < n => s,
            _ => return fail(ln, format!("bad source state `{}`", toks[0])),
        };
        let dst: u32 = match toks[2].parse() {
            Ok(s) if s < n => s,
            _ => return fail(ln, format!("bad target state `{}`", toks[2])),
        };
        if toks[1].len() != arity {
            return fail(ln, format!("symbol `{}` must have {arity} letters", toks[1]));
        }
        let sym = match Sym::parse(toks[1]) {
            Some(s) => s,
            None => return fail(ln, format!("symbol `{}` has letters outside 0/1/#", toks[1])),
        };
        edges.push((src, dst, Label::point(sym, arity)));
    }
    Ok(Buchi::new(arity, n, initial, accepting, edges))
}
