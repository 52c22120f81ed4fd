use buchi::ops::{intersect_all, project, rearrange, reduce, ReduceOptions};
use buchi::{Buchi, Limits};
use sturm::ostrowski::{build_less_real, build_zero, topological_closure};

fn run(x: &Buchi, name: &str) {
    let limits = Limits::default();
    let t0 = std::time::Instant::now();
    match topological_closure(x, &limits) {
        Ok(cl) => eprintln!(
            "[{name}] closure: {} states {} edges in {:?}",
            cl.state_count(),
            cl.edge_count(),
            t0.elapsed()
        ),
        Err(e) => eprintln!("[{name}] FAILED after {:?}: {e:?}", t0.elapsed()),
    }
}

#[test]
#[ignore]
fn probe_zero_closure() {
    run(&build_zero(), "zero");
}

#[test]
#[ignore]
fn probe_ray_closure() {
    let opts = ReduceOptions::default();
    let less = build_less_real();
    let zero3 = rearrange(&build_zero(), &[0, 1], 3).unwrap();
    let prod = intersect_all(&[zero3, less]).unwrap();
    let x = reduce(&project(&prod, 1).unwrap(), &opts);
    run(&x, "ray");
}
