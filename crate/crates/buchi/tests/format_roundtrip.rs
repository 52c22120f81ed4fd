use buchi::{all_syms, format, Buchi, BuchiError, Label};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn print_parse_print_is_bit_identical() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..40 {
        let arity = rng.random_range(1..=3);
        let n = rng.random_range(1..=6u32);
        let syms = all_syms(arity);
        let mut edges = Vec::new();
        for s in 0..n {
            for _ in 0..rng.random_range(0..4) {
                let dst = rng.random_range(0..n);
                let sym = syms[rng.random_range(0..syms.len())];
                edges.push((s, dst, Label::point(sym, arity)));
            }
        }
        let accepting: Vec<u32> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
        let a = Buchi::new(arity, n, vec![0], accepting, edges);
        let text = format::print(&a);
        let b = format::parse(&text).expect("own output must parse");
        assert_eq!(format::print(&b), text);
        assert_eq!(b.state_count(), a.state_count());
        assert_eq!(b.arity(), a.arity());
    }
}

#[test]
fn cube_labels_expand_to_symbols_in_order() {
    let a = Buchi::new(1, 1, vec![0], [0], vec![(0, 0, Label::full(1))]);
    let text = format::print(&a);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines,
        vec!["arity 1 states 1", "initial 0", "accepting 0", "0 0 0", "0 1 0", "0 # 0"]
    );
}

fn parse_err(text: &str) -> (usize, String) {
    match format::parse(text) {
        Err(BuchiError::Parse { line, msg }) => (line, msg),
        other => panic!("expected parse error, got {other:?}"),
    }
}

#[test]
fn parse_errors_carry_line_numbers() {
    let (line, _) = parse_err("");
    assert_eq!(line, 1);

    let (line, msg) = parse_err("arity 2 states 2\ninitial 0\naccepting 1\n0 01 5");
    assert_eq!(line, 4);
    assert!(msg.contains("target") || msg.contains("5"), "{msg}");

    let (line, msg) = parse_err("arity 2 states 2\ninitial 0\naccepting 1\n0 012 1");
    assert_eq!(line, 4);
    assert!(msg.contains("2 letters"), "{msg}");

    let (line, _) = parse_err("arity 2 states 2\ninitial 9\naccepting 1");
    assert_eq!(line, 2);

    let (line, msg) = parse_err("arity 99 states 2\ninitial 0\naccepting 1");
    assert_eq!(line, 1);
    assert!(msg.contains("arity"), "{msg}");
}

#[test]
fn comments_and_blank_lines_are_skipped() {
    let text = "// header comment\narity 1 states 2\n\ninitial 0\naccepting 1\n// body\n0 1 1\n1 0 1\n";
    let a = format::parse(text).unwrap();
    assert_eq!(a.state_count(), 2);
    assert_eq!(a.edge_count(), 2);
}
