//! Exit criteria. Each criterion prints one `PASS`/`FAIL` line; the process
//! exits non-zero if any criterion fails. All comparisons are exact.

mod common;

use std::time::Instant;

use triorient::classes::{class_profile, three_colouring};
use triorient::constraint::{dual, ConstraintDigraph};
use triorient::families::{self, gen_tjoin, TJoinSpec};
use triorient::obstruction::{verify_homomorphism, ChainLayout, ObstructionKind};
use triorient::patterns::brute_force_orientable_with_cap;
use triorient::solver::scc_reverse_topological;
use triorient::{
    brute_force_orientable, extract_t3_obstruction, solve, violations, Certificate, ForbiddenSet,
    Graph, T3Outcome,
};

use common::{labelled_graphs, random_small_graph, rng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn set(s: &str) -> ForbiddenSet {
    s.parse().unwrap()
}

fn main() {
    let criteria: &[Criterion] = &[
        (
            "oracle equivalence, n <= 6, all 15 simple sets",
            oracle_equivalence,
        ),
        ("certificate soundness", certificate_soundness),
        (
            "T3 obstruction completeness, n <= 7",
            obstruction_completeness,
        ),
        (
            "worked t-join construction golden values",
            worked_tjoin_golden,
        ),
        (
            "skew-symmetry and |V+| = 2m, 1000 random graphs",
            skew_symmetry_and_order,
        ),
        ("|E+| <= m * maxdeg, 1000 random graphs", arc_count_bound),
        (
            "structural equivalences, n <= 6 plus 500 random n <= 12",
            structural_equivalences,
        ),
        ("necessary and sufficient T3 conditions", t3_conditions),
        ("known instances", known_instances),
        (
            "t-join triangle count p + q - 2, p + q <= 12",
            tjoin_triangles,
        ),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {name} [{detail}] ({secs:.1}s)"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail} ({secs:.1}s)");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn oracle_equivalence() -> Outcome {
    let sets = ForbiddenSet::nonempty_simple_sets();
    let mut checked = 0usize;
    for n in 0..=6 {
        for g in labelled_graphs(n) {
            for &f in &sets {
                let d = ConstraintDigraph::build(&g, f).unwrap();
                let sccs = scc_reverse_topological(&d);
                let split =
                    (0..d.order()).all(|v| sccs.component_of(v) != sccs.component_of(dual(v)));
                let solver_yes = solve(&g, f).unwrap().is_yes();
                let oracle_yes = brute_force_orientable(&g, f).unwrap().is_some();
                ensure(solver_yes == split && split == oracle_yes, || {
                    format!("{f} on {:?}: solver {solver_yes}, components split {split}, oracle {oracle_yes}", g.edges())
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} graph/set pairs agree"))
}

fn certificate_soundness() -> Outcome {
    let sets = ForbiddenSet::nonempty_simple_sets();
    let (mut yes, mut no) = (0usize, 0usize);
    let mut check = |g: &Graph| -> Result<(), String> {
        for &f in &sets {
            match solve(g, f).unwrap() {
                Certificate::Yes(o) => {
                    let v = violations(&o, f);
                    ensure(v.is_empty(), || {
                        format!("{f} on {:?}: YES orientation has {v:?}", g.edges())
                    })?;
                    yes += 1;
                }
                Certificate::No { edge: (x, y), path } => {
                    let d = ConstraintDigraph::build(g, f).unwrap();
                    let ids: Option<Vec<usize>> =
                        path.iter().map(|&(a, b)| d.vertex(a, b)).collect();
                    let ids = ids.ok_or_else(|| format!("{f}: path leaves the vertex set"))?;
                    let valid = path.first() == Some(&(x, y))
                        && path.last() == Some(&(y, x))
                        && ids.windows(2).all(|w| d.has_arc(w[0], w[1]));
                    ensure(valid, || {
                        format!("{f} on {:?}: invalid NO path {path:?}", g.edges())
                    })?;
                    no += 1;
                }
            }
        }
        Ok(())
    };
    for n in 0..=6 {
        for g in labelled_graphs(n) {
            check(&g)?;
        }
    }
    let mut r = rng(0x5eed_0002);
    for _ in 0..500 {
        check(&random_small_graph(&mut r, 30))?;
    }
    Ok(format!("{yes} YES and {no} NO certificates verified"))
}

fn obstruction_completeness() -> Outcome {
    let mut counts = [0usize; 2];
    for n in 0..=7 {
        for g in labelled_graphs(n) {
            let outcome =
                extract_t3_obstruction(&g).map_err(|e| format!("{:?}: {e}", g.edges()))?;
            let T3Outcome::Obstructed(ob) = outcome else {
                continue;
            };
            let odd = ob.tjoin.count_triangles() % 2 == 1;
            let kind_ok = match ob.kind {
                ObstructionKind::OddDonut => odd,
                ObstructionKind::EvenMobiusDonut => !odd,
            };
            let loop_free = ob.host.edges().iter().all(|&(u, v)| u != v);
            let hom = verify_homomorphism(&ob.host_map, &ob.host, &g).unwrap_or(false);
            ensure(kind_ok && loop_free && hom, || {
                format!(
                    "{:?}: kind {:?} parity odd={odd} loop-free={loop_free} hom={hom}",
                    g.edges(),
                    ob.kind
                )
            })?;
            counts[usize::from(ob.kind.is_mobius())] += 1;
        }
    }
    Ok(format!(
        "{} odd donuts, {} even Mobius donuts",
        counts[0], counts[1]
    ))
}

fn worked_tjoin_golden() -> Outcome {
    let layout = ChainLayout::from_k(&[0, 0, 0, 2, 2, 4, 5]).map_err(|e| e.to_string())?;
    ensure(layout.c == [0, 1, 1, 0, 0, 1, 0], || {
        format!("c = {:?}", layout.c)
    })?;
    ensure(layout.p0[2..] == [0, 0, 3, 4, 4], || {
        format!("p0 = {:?}", layout.p0)
    })?;
    ensure(layout.p1[2..] == [1, 2, 2, 2, 5], || {
        format!("p1 = {:?}", layout.p1)
    })?;
    let mut edges: Vec<(usize, usize)> = layout
        .edges()
        .into_iter()
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    edges.sort();
    let mut expected: Vec<(usize, usize)> = [
        (0, 1),
        (2, 0),
        (2, 1),
        (3, 0),
        (3, 2),
        (4, 3),
        (4, 2),
        (5, 4),
        (5, 2),
        (6, 4),
        (6, 5),
    ]
    .into_iter()
    .map(|(a, b)| (a.min(b), a.max(b)))
    .collect();
    expected.sort();
    ensure(edges == expected, || format!("E6 = {edges:?}"))?;
    Ok("c, p0, p1 and E6 match".into())
}

/// 1000 graphs with `n <= 50`, in a fixed seeded sequence.
fn random_corpus() -> Vec<Graph> {
    let mut r = rng(0x5eed_0005);
    (0..1000).map(|_| random_small_graph(&mut r, 50)).collect()
}

fn skew_symmetry_and_order() -> Outcome {
    let mut arcs = 0usize;
    for g in random_corpus() {
        for f in ForbiddenSet::nonempty_simple_sets() {
            let d = ConstraintDigraph::build(&g, f).unwrap();
            ensure(d.order() == 2 * g.m(), || {
                format!("{f}: order {} for m = {}", d.order(), g.m())
            })?;
            for (u, v) in d.arcs() {
                ensure(d.has_arc(dual(v), dual(u)), || {
                    format!("{f}: arc {u}->{v} lacks its dual")
                })?;
                arcs += 1;
            }
        }
    }
    Ok(format!("{arcs} arcs checked"))
}

fn arc_count_bound() -> Outcome {
    let mut worst: Option<(ForbiddenSet, usize, usize, usize)> = None;
    let mut violating = 0usize;
    let mut total = 0usize;
    for g in random_corpus() {
        for f in ForbiddenSet::nonempty_simple_sets() {
            let d = ConstraintDigraph::build(&g, f).unwrap();
            let bound = g.m() * g.max_degree();
            total += 1;
            if d.arc_count() > bound {
                violating += 1;
                if worst.is_none_or(|(_, a, b, _)| d.arc_count() * b > a * bound.max(1)) {
                    worst = Some((f, d.arc_count(), bound, g.n()));
                }
            }
        }
    }
    match worst {
        None => Ok(format!("{total} digraphs within bound")),
        Some((f, arcs, bound, n)) => Err(format!(
            "{violating} of {total} digraphs exceed the bound; worst ratio {f} on n = {n}: {arcs} arcs > {bound}"
        )),
    }
}

fn structural_equivalences() -> Outcome {
    let mut graphs: Vec<Graph> = (0..=6).flat_map(labelled_graphs).collect();
    let mut r = rng(0x5eed_0006);
    graphs.extend((0..500).map(|_| random_small_graph(&mut r, 12)));
    let yes = |g: &Graph, s: &str| solve(g, set(s)).unwrap().is_yes();
    for g in &graphs {
        let p = class_profile(g);
        let rows = [
            ("B1,T3", p.unicyclic_per_component),
            ("B2,T3", p.unicyclic_per_component),
            ("B1,B2,T3", p.max_degree_le_2),
            ("B1,B3,T3", p.star_or_triangle_components),
            ("B2,B3,T3", p.star_or_triangle_components),
            ("B1,B2,B3", p.complete_components),
        ];
        for (s, expected) in rows {
            ensure(yes(g, s) == expected, || {
                format!("{s} on {:?}: predicate {expected}", g.edges())
            })?;
        }
        ensure(yes(g, "B1,B3") == yes(g, "B2,B3"), || {
            format!("B1,B3 vs B2,B3 on {:?}", g.edges())
        })?;
        ensure(yes(g, "B1,T3") == yes(g, "B2,T3"), || {
            format!("B1,T3 vs B2,T3 on {:?}", g.edges())
        })?;
    }
    Ok(format!("{} graphs, zero disagreements", graphs.len()))
}

fn t3_conditions() -> Outcome {
    let t3 = set("T3");
    let mut corpus: Vec<Graph> = (0..=6).flat_map(labelled_graphs).collect();
    let mut r = rng(0x5eed_0007);
    corpus.extend((0..500).map(|_| random_small_graph(&mut r, 12)));
    let mut yes_count = 0;
    for g in &corpus {
        if solve(g, t3).unwrap().is_yes() {
            let p = class_profile(g);
            ensure(p.k4_free && p.locally_bipartite, || {
                format!("T3-YES {:?} fails K4-free/locally bipartite", g.edges())
            })?;
            yes_count += 1;
        }
    }
    let mut colourable = 0;
    let mut drawn = 0;
    while colourable < 200 {
        drawn += 1;
        let g = random_small_graph(&mut r, 11);
        if three_colouring(&g).is_some() {
            ensure(solve(&g, t3).unwrap().is_yes(), || {
                format!("3-colourable {:?} is T3-NO", g.edges())
            })?;
            colourable += 1;
        }
    }
    Ok(format!("{yes_count} T3-YES graphs satisfy the necessary conditions; 200 of {drawn} drawn graphs 3-colourable, all T3-YES"))
}

fn known_instances() -> Outcome {
    let t3 = set("T3");
    ensure(!solve(&families::complete(4), t3).unwrap().is_yes(), || {
        "K4 is T3-YES".into()
    })?;
    let b1b2c3 = set("B1,B2,C3");
    for (name, g) in [
        ("Hajos", families::hajos()),
        ("4-wheel", families::wheel(4).unwrap()),
    ] {
        ensure(
            brute_force_orientable(&g, b1b2c3).unwrap().is_none(),
            || format!("{name} has a B1,B2,C3-free orientation"),
        )?;
    }
    ensure(solve(&families::grotzsch(), t3).unwrap().is_yes(), || {
        "Grotzsch graph is T3-NO".into()
    })?;
    let w5 = families::wheel(5).unwrap();
    match extract_t3_obstruction(&w5).map_err(|e| e.to_string())? {
        T3Outcome::Obstructed(ob) => ensure(
            verify_homomorphism(&ob.host_map, &ob.host, &w5).unwrap(),
            || "5-wheel obstruction map is not a homomorphism".into(),
        )?,
        T3Outcome::Orientable(_) => return Err("5-wheel is T3-YES".into()),
    }
    // triangle-free unicyclic <=> {B1,C3,T3}-orientable, m <= 14
    let f = set("B1,C3,T3");
    let mut checked = 0;
    let mut check = |g: &Graph| -> Result<(), String> {
        let p = class_profile(g);
        let oracle = brute_force_orientable_with_cap(g, f, 14).unwrap().is_some();
        ensure(
            oracle == (p.triangle_free && p.unicyclic_per_component),
            || format!("{f} on {:?}: oracle {oracle}", g.edges()),
        )?;
        checked += 1;
        Ok(())
    };
    for n in 0..=6 {
        for g in labelled_graphs(n).filter(|g| g.m() <= 14) {
            check(&g)?;
        }
    }
    let mut r = rng(0x5eed_0008);
    let mut extra = 0;
    while extra < 300 {
        let g = random_small_graph(&mut r, 14);
        if g.m() <= 14 {
            check(&g)?;
            extra += 1;
        }
    }
    Ok(format!(
        "K4, Hajos, 4-wheel, Grotzsch, 5-wheel; {checked} graphs for B1,C3,T3"
    ))
}

fn tjoin_triangles() -> Outcome {
    let mut checked = 0;
    for total in 4..=12 {
        for p in 1..total {
            for spec in TJoinSpec::all(p, total - p) {
                let t = gen_tjoin(&spec).count_triangles();
                ensure(t == total - 2, || format!("{spec}: {t} triangles"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} merge sequences"))
}
