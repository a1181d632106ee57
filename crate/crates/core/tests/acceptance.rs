//! One line per acceptance criterion; exits non-zero if any fails.
//!
//! Verdicts from the library are compared against brute-force oracles
//! written directly against the multiplication table.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use sqcomm_core::catalog::{self, CatalogEntry};
use sqcomm_core::presentation::{EnumerationError, DEFAULT_MAX_COSETS};
use sqcomm_core::sqcomm;
use sqcomm_core::verify::{self, ORDER_12_NAME, ORDER_16_NAME};
use sqcomm_core::{are_isomorphic, todd_coxeter, CayleyGroup, ElementId, Presentation};

fn ids(g: &CayleyGroup) -> Vec<ElementId> {
    g.elements().collect()
}

fn oracle_sq(g: &CayleyGroup) -> bool {
    let all = ids(g);
    all.iter().all(|&x| {
        all.iter().all(|&y| {
            let (xy, yx) = (g.mul(x, y), g.mul(y, x));
            g.mul(xy, xy) == g.mul(yx, yx)
        })
    })
}

fn oracle_abelian(g: &CayleyGroup) -> bool {
    let all = ids(g);
    all.iter().all(|&x| all.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
}

fn oracle_center(g: &CayleyGroup) -> Vec<ElementId> {
    let all = ids(g);
    all.iter().copied().filter(|&z| all.iter().all(|&y| g.mul(z, y) == g.mul(y, z))).collect()
}

fn order_of(text: &str, limit: usize) -> Result<usize, EnumerationError> {
    todd_coxeter(&Presentation::parse(text).unwrap(), limit).map(|r| r.group.order())
}

type Check = Result<(), String>;
type Criterion<'a> = (&'static str, Duration, Box<dyn Fn() -> Check + 'a>);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn census() -> Check {
    let list = catalog::small_groups_under_12();
    ensure(list.len() == 19, || format!("{} groups", list.len()))?;
    let failing: Vec<&str> = list.iter().filter(|e| !oracle_sq(&e.group)).map(|e| e.name.as_str()).collect();
    ensure(failing == ["D6", "D10"], || format!("oracle says {failing:?}"))?;
    for e in &list {
        ensure(sqcomm::is_square_commutative(&e.group) == oracle_sq(&e.group), || e.name.clone())?;
    }
    Ok(())
}

fn hat_equivalence(corpus: &[CatalogEntry]) -> Check {
    ensure(corpus.len() >= 40, || format!("corpus has {} groups", corpus.len()))?;
    for e in corpus {
        let g = &e.group;
        ensure(g.order() <= 64, || format!("{} has order {}", e.name, g.order()))?;
        let sq = oracle_sq(g);
        let hat = sqcomm::hat_group(g);
        ensure(sq == oracle_abelian(hat.quotient()), || format!("{}: hat group disagrees", e.name))?;
        if sq {
            for x in g.elements() {
                for y in g.elements() {
                    ensure(sqcomm::sim_witness(g, x, y).is_some(), || {
                        format!("{}: no sim witness for ({}, {})", e.name, g.label(x), g.label(y))
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn squares_central(corpus: &[CatalogEntry]) -> Check {
    for e in corpus {
        let center = oracle_center(&e.group);
        let central = e.group.elements().all(|x| center.contains(&e.group.mul(x, x)));
        ensure(sqcomm::squares_central(&e.group) == central, || format!("{}: squares_central wrong", e.name))?;
        ensure(central == oracle_sq(&e.group), || format!("{}: equivalence fails", e.name))?;
    }
    Ok(())
}

fn two_generator(corpus: &[CatalogEntry]) -> Check {
    let mut cases = 0;
    for e in corpus {
        let [a, b] = e.canonical_generators[..] else { continue };
        cases += 1;
        let r = sqcomm::two_generator_criterion(&e.group, a, b).map_err(|err| format!("{}: {err}", e.name))?;
        ensure(r.overall == oracle_sq(&e.group), || format!("{}: criterion {}", e.name, r.overall))?;
    }
    ensure(cases >= 20, || format!("only {cases} two-generated groups"))?;
    for (name, failing) in [(ORDER_12_NAME, sqcomm::REL_B2A), (ORDER_16_NAME, sqcomm::REL_ABAB)] {
        let e = corpus.iter().find(|e| e.name == name).ok_or_else(|| format!("{name} missing"))?;
        let (a, b) = (e.canonical_generators[0], e.canonical_generators[1]);
        let r = sqcomm::two_generator_criterion(&e.group, a, b).unwrap();
        let failed: Vec<&str> = r.relations.iter().filter(|v| !v.holds).map(|v| v.name.as_str()).collect();
        ensure(failed == [failing], || format!("{name}: failing {failed:?}"))?;
    }
    Ok(())
}

fn n_generator(corpus: &[CatalogEntry]) -> Check {
    let mut cases = 0;
    for e in corpus.iter().filter(|e| e.canonical_generators.len() >= 3) {
        cases += 1;
        let r = sqcomm::n_generator_criterion(&e.group, &e.canonical_generators)
            .map_err(|err| format!("{}: {err}", e.name))?;
        ensure(r.overall == oracle_sq(&e.group), || format!("{}: criterion {}", e.name, r.overall))?;
    }
    ensure(cases >= 10, || format!("only {cases} groups with >= 3 generators"))
}

fn coverage(corpus: &[CatalogEntry]) -> Check {
    for e in corpus.iter().filter(|e| oracle_sq(&e.group)) {
        let g = &e.group;
        let gens = &e.canonical_generators;
        // C_n by explicit subsequence products, then C_n Z by hand
        let mut c = vec![g.identity()];
        for &x in gens {
            let extended: Vec<ElementId> = c.iter().map(|&p| g.mul(p, x)).collect();
            c.extend(extended);
        }
        let center = oracle_center(g);
        let mut covered: Vec<ElementId> = c.iter().flat_map(|&p| center.iter().map(move |&z| g.mul(p, z))).collect();
        covered.sort();
        covered.dedup();
        ensure(covered.len() == g.order(), || format!("{}: C_n Z has {} elements", e.name, covered.len()))?;
        ensure(sqcomm::coverage_check(g, gens) == Ok(true), || format!("{}: coverage_check", e.name))?;
        if let [a, b] = gens[..] {
            for x in g.elements() {
                let nf = sqcomm::normal_form_two_gen(g, a, b, x).map_err(|err| format!("{}: {err}", e.name))?;
                let ab2 = g.mul(g.mul(a, b), g.mul(a, b));
                let value =
                    g.mul(g.mul(g.pow(a, nf.h_a as i64), g.pow(b, nf.h_b as i64)), g.pow(ab2, i64::from(nf.lambda)));
                ensure(value == x, || format!("{}: normal form of {} is wrong", e.name, g.label(x)))?;
            }
        }
    }
    Ok(())
}

fn identities(corpus: &[CatalogEntry]) -> Check {
    for e in corpus.iter().filter(|e| oracle_sq(&e.group)) {
        let g = &e.group;
        ensure(sqcomm::sandwich_check(g, -3..=3, -3..=3) == Ok(None), || format!("{}: sandwich", e.name))?;
        ensure(sqcomm::fourth_power_check(g).is_none(), || format!("{}: fourth power", e.name))?;
        ensure(sqcomm::reorder_defect_check(g, &e.canonical_generators, 4) == Ok(None), || {
            format!("{}: reorder defect", e.name)
        })?;
    }
    Ok(())
}

fn enumeration() -> Check {
    let twelve = order_of(verify::ORDER_12_PRESENTATION, DEFAULT_MAX_COSETS).map_err(|e| e.to_string())?;
    let sixteen = order_of(verify::ORDER_16_PRESENTATION, DEFAULT_MAX_COSETS).map_err(|e| e.to_string())?;
    ensure((twelve, sixteen) == (12, 16), || format!("orders {twelve}, {sixteen}"))?;
    for n in 1..=10 {
        let order = order_of(&format!("< a, b | a^{n} = b^2 = 1, a b a = b >"), DEFAULT_MAX_COSETS)
            .map_err(|e| e.to_string())?;
        ensure(order == 2 * n, || format!("dihedral n = {n}: order {order}"))?;
    }
    match order_of("< a, b | a^2 b = b a^3 >", 1000) {
        Err(EnumerationError::CosetLimitExceeded { limit: 1000 }) => Ok(()),
        other => Err(format!("BS(2,3): {other:?}")),
    }
}

fn dihedral() -> Check {
    let sq: Vec<u64> = (1..=8).filter(|&n| oracle_sq(&catalog::dihedral(n).unwrap().group)).collect();
    ensure(sq == [1, 2, 4], || format!("square commutative for n in {sq:?}"))?;
    for n in 1..=8 {
        let g = catalog::dihedral(n).unwrap().group;
        ensure(sqcomm::is_square_commutative(&g) == sq.contains(&n), || format!("n = {n}"))?;
    }
    Ok(())
}

fn heisenberg() -> Check {
    let h3 = catalog::heisenberg_mod(3).unwrap().group;
    ensure(oracle_center(&h3).len() == 3, || "Heis3 center".into())?;
    ensure(sqcomm::g_mod_center_abelian(&h3), || "Heis3: G/Z not abelian".into())?;
    ensure(!oracle_sq(&h3) && !sqcomm::is_square_commutative(&h3), || "Heis3 square commutative".into())?;
    let h2 = catalog::heisenberg_mod(2).unwrap().group;
    let d8 = catalog::dihedral(4).unwrap().group;
    ensure(matches!(are_isomorphic(&h2, &d8), Ok(Some(_))), || "Heis2 not D8".into())?;
    ensure(oracle_sq(&h2) && sqcomm::is_square_commutative(&h2), || "Heis2 not square commutative".into())
}

fn metacyclic(corpus: &[CatalogEntry]) -> Check {
    for n in 3..=12u64 {
        for j in 2..n {
            if j * j % n != 1 {
                continue;
            }
            let g = catalog::metacyclic(n, 2, j).unwrap().group;
            ensure(g.order() as u64 == 2 * n, || format!("M({n},2,{j}) has order {}", g.order()))?;
            let predicted = j % 2 == 1 && n == 2 * (j - 1);
            ensure(oracle_sq(&g) == predicted, || format!("M({n},2,{j}): predicted {predicted}"))?;
        }
    }
    for e in corpus.iter().filter(|e| oracle_sq(&e.group)) {
        let g = &e.group;
        for x in g.elements() {
            for y in g.elements() {
                for p in 1..=6i64 {
                    for q in 1..=6i64 {
                        if g.mul(g.pow(x, p), y) != g.mul(y, g.pow(x, q)) {
                            continue;
                        }
                        let k = if p % 2 == 1 && q % 2 == 1 { 2 * (p - q) } else { p - q };
                        ensure(g.pow(x, k) == g.identity(), || format!("{}: p = {p}, q = {q}", e.name))?;
                    }
                }
            }
        }
        ensure(sqcomm::power_exchange_check(g, 6).is_none(), || format!("{}: library disagrees", e.name))?;
    }
    Ok(())
}

fn conditional(corpus: &[CatalogEntry]) -> Check {
    for e in corpus {
        let [a, b] = e.canonical_generators[..] else { continue };
        let c = sqcomm::conditional_equivalence_checks(&e.group, a, b).map_err(|err| format!("{}: {err}", e.name))?;
        ensure(c.all_hold(), || format!("{}: {c:?}", e.name))?;
        ensure(c.center_quotient_and_square.left == oracle_sq(&e.group), || format!("{}: left side", e.name))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let corpus = verify::corpus();
    let secs = Duration::from_secs;
    let criteria: Vec<Criterion> = vec![
        ("1 small-groups census", secs(1), Box::new(census)),
        ("2 hat group equivalence", secs(10), Box::new(|| hat_equivalence(&corpus))),
        ("3 central squares equivalence", secs(5), Box::new(|| squares_central(&corpus))),
        ("4 two-generator criterion", secs(5), Box::new(|| two_generator(&corpus))),
        ("5 n-generator criterion", secs(5), Box::new(|| n_generator(&corpus))),
        ("6 coverage and normal form", secs(5), Box::new(|| coverage(&corpus))),
        ("7 proof identities", secs(20), Box::new(|| identities(&corpus))),
        ("8 enumeration goldens", secs(5), Box::new(enumeration)),
        ("9 dihedral classification", secs(1), Box::new(dihedral)),
        ("10 Heisenberg counterexample", secs(1), Box::new(heisenberg)),
        ("11 metacyclic grid and power exchange", secs(30), Box::new(|| metacyclic(&corpus))),
        ("12 conditional equivalences", secs(10), Box::new(|| conditional(&corpus))),
    ];
    let mut failures = 0;
    for (name, limit, run) in &criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let verdict = match (&result, elapsed <= *limit) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL (over the {}s limit)", limit.as_secs()),
            (Err(msg), _) => format!("FAIL ({msg})"),
        };
        if !verdict.starts_with("PASS") {
            failures += 1;
        }
        println!("{verdict} criterion {name} [{} ms]", elapsed.as_millis());
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
