//! Acceptance suite: one test per acceptance criterion, each printing a
//! single `CRITERION k: PASS/FAIL` line before asserting. A failing test
//! here means the computed values disagree with the claimed closed forms;
//! the companion `truth` tests in this file pin the values this engine
//! (and the independent oracles in `common`) actually produce.

mod common;

use pres_core::decision::{
    conj_free_monoid, min_conjugator_free_group, wp_bounded, BoundFunction, BoundedQuantity,
    Verdict, Witness, WpMethod,
};
use pres_core::invariants::{
    check_opti, dehn_table, dl_table, gamma0_table, gamma_table, gwork_table, sdl_table,
    work_table, ClassPartition, ConjMethod, Table2D,
};
use pres_core::rewrite::{cost_closure, min_cost_derivation, CompiledSystem, SearchResult};
use pres_core::tietze::{
    apply, check_gamma_dist_invariance, check_length_bridge, check_t1_inequality,
    check_t3_inequality, TietzeMove,
};
use pres_core::words::words_up_to;
use pres_core::{builtin, CostModel, Derivation, Presentation, RuleOrigin, SearchCaps, Word};

fn report(k: usize, violations: &[String], pass_detail: &str) {
    if violations.is_empty() {
        println!("CRITERION {k}: PASS — {pass_detail}");
    } else {
        println!(
            "CRITERION {k}: FAIL — {} violation(s), first: {}",
            violations.len(),
            violations[0]
        );
    }
    assert!(violations.is_empty(), "criterion {k}: {violations:#?}");
}

/// Render for the string oracles: the empty word as "", not "1".
fn srender(w: &Word) -> String {
    if w.len() == 0 {
        String::new()
    } else {
        w.render()
    }
}

fn cell(t: &Table2D, m: usize, n: usize) -> u64 {
    t.get(m, n).unwrap_or_else(|| panic!("cell ({m},{n}) truncated"))
}

// ---------------------------------------------------------------- 1

#[test]
fn criterion_1_free_group_dl_and_work() {
    let p = builtin("free_group_monoid(2)").unwrap();
    let caps = SearchCaps::new(6, 10_000, 4_000_000);
    let dl = dl_table(&p, 6, 6, &caps).unwrap();
    let work = work_table(&p, 6, 6, &caps).unwrap();
    let mut bad = Vec::new();
    for m in 0..=6 {
        for n in 0..=6 {
            let want = (m / 2 + n / 2) as u64;
            let got = cell(&dl, m, n);
            if got != want {
                bad.push(format!("DL({m},{n}) = {got}, closed form {want}"));
            }
            let w = cell(&work, m, n);
            if w != 2 * got {
                bad.push(format!("Omega({m},{n}) = {w}, expected 2*DL = {}", 2 * got));
            }
        }
    }
    report(1, &bad, "DL(m,n) = floor(m/2) + floor(n/2) and Omega = 2*DL on 49 cells");
}

// ---------------------------------------------------------------- 2

#[test]
fn criterion_2_commutative_dl_and_work() {
    let caps = SearchCaps::new(5, 10_000, 1_000_000);
    let mut bad = Vec::new();

    let p3 = builtin("free_commutative_monoid(3)").unwrap();
    let dl3 = dl_table(&p3, 5, 5, &caps).unwrap();
    let work3 = work_table(&p3, 5, 5, &caps).unwrap();
    for n in 0..=3usize {
        for m in n..=5 {
            let want = (n.saturating_sub(1) * n / 2) as u64;
            let got = cell(&dl3, m, n);
            if got != want {
                bad.push(format!("3 letters: DL({m},{n}) = {got}, claimed (n-1)n/2 = {want}"));
            }
        }
    }

    let p2 = builtin("free_commutative_monoid(2)").unwrap();
    let dl2 = dl_table(&p2, 5, 5, &caps).unwrap();
    let work2 = work_table(&p2, 5, 5, &caps).unwrap();
    for n in 3..=5usize {
        for m in n..=5 {
            let want = (n - 1) as u64;
            let got = cell(&dl2, m, n);
            if got != want {
                bad.push(format!("2 letters: DL({m},{n}) = {got}, claimed n-1 = {want}"));
            }
        }
    }

    for (label, dl, work) in [("3 letters", &dl3, &work3), ("2 letters", &dl2, &work2)] {
        for m in 0..=5 {
            for n in 0..=5 {
                let (d, w) = (cell(dl, m, n), cell(work, m, n));
                if w != 4 * d {
                    bad.push(format!("{label}: Omega({m},{n}) = {w}, expected 4*DL = {}", 4 * d));
                }
            }
        }
    }
    report(2, &bad, "commutative DL closed forms and Omega = 4*DL");
}

#[test]
fn truth_2_commutative_dl_is_max_inversion_count() {
    // the engine's DL for two commuting letters equals the maximum number
    // of adjacent transpositions needed, floor(n^2/4), not n-1
    let p2 = builtin("free_commutative_monoid(2)").unwrap();
    let caps = SearchCaps::new(5, 10_000, 1_000_000);
    let dl2 = dl_table(&p2, 5, 5, &caps).unwrap();
    for n in 0..=5usize {
        assert_eq!(cell(&dl2, n, n), (n * n / 4) as u64, "DL({n},{n})");
    }
    // cross-check the extremal pair with an independent string BFS
    assert_eq!(common::bfs_dl("bbaa", "aabb", &[("ab", "ba")], 4), Some(4));
    assert_eq!(common::bfs_dl("bbbaa", "aabbb", &[("ab", "ba")], 5), Some(6));
}

// ---------------------------------------------------------------- 3

#[test]
fn criterion_3_abelian_dehn_and_gwork() {
    let p = builtin("free_abelian_group(2)").unwrap();
    let caps = SearchCaps::new(12, 10_000, 8_000_000);
    let dehn = dehn_table(&p, 9, &caps).unwrap();
    let gwork = gwork_table(&p, 9, &caps).unwrap();
    let claimed: [u64; 10] = [0, 0, 0, 0, 1, 1, 2, 2, 3, 3];
    let mut bad = Vec::new();
    for n in 0..=9usize {
        let got = dehn.get(n).unwrap_or_else(|| panic!("Dehn({n}) truncated"));
        if got != claimed[n] {
            bad.push(format!("Dehn({n}) = {got}, claimed {}", claimed[n]));
        }
        let g = gwork.get(n).unwrap_or_else(|| panic!("gwork({n}) truncated"));
        if g != 4 * got {
            bad.push(format!("gwork({n}) = {g}, expected 4*Dehn = {}", 4 * got));
        }
    }
    report(3, &bad, "Dehn values match the claimed sequence and gwork = 4*Dehn");
}

#[test]
fn truth_3_abelian_area_matches_winding_number_oracle() {
    // every trivial word of length <= 8 has engine area equal to the L1
    // norm of the winding number of its lattice path; in particular
    // a a b b A A B B has area 4, so Dehn(8) = 4
    let p = builtin("free_abelian_group(2)").unwrap();
    let sys = CompiledSystem::compile(&p).unwrap();
    let caps = SearchCaps::new(10, 10_000, 4_000_000);
    let start = Word::empty(p.alphabet.clone());
    let closure = cost_closure(&start, &sys, CostModel::AreaSteps, &caps, None).unwrap();
    assert!(!closure.truncated);
    let mut engine: std::collections::HashMap<String, u64> = Default::default();
    for (letters, cost) in closure.iter() {
        if letters.len() <= 8 {
            let w = Word::from_letters(p.alphabet.clone(), letters.to_vec());
            engine.insert(w.render(), cost);
        }
    }
    assert_eq!(engine.get("1").copied(), Some(0));
    let mut checked = 0usize;
    for len in 1..=8usize {
        for w in common::strings_of_len(&['a', 'A', 'b', 'B'], len) {
            let oracle = common::winding_area(&w);
            let got = engine.get(&w).copied();
            assert_eq!(got, oracle, "area of {w:?}");
            checked += oracle.is_some() as usize;
        }
    }
    assert!(checked > 500, "only {checked} trivial words checked");
    assert_eq!(engine.get("aabbAABB").copied(), Some(4));
}

// ---------------------------------------------------------------- 4

#[test]
fn criterion_4_conjugacy_tables() {
    let mut bad = Vec::new();

    // gamma(ab, ba) = |b| and gamma(ba, ab) = |a| on 20 generated pairs
    let free = builtin("free_monoid(2)").unwrap();
    let mut pairs = Vec::new();
    'outer: for a in words_up_to(&free.alphabet, 3) {
        for b in words_up_to(&free.alphabet, 3) {
            if a.len() == 0 || b.len() == 0 {
                continue;
            }
            let ab = a.concat(&b).unwrap();
            let ba = b.concat(&a).unwrap();
            // ab = ba exactly when ab is a proper power of a common root,
            // and for non-primitive ab the minimal conjugator is the one
            // for the root, shorter than |b|; the claim concerns pairs
            // that genuinely split as a product of a primitive word
            if ab == ba || !common::is_primitive(&ab.render()) {
                continue;
            }
            pairs.push((a.clone(), b.clone(), ab, ba));
            if pairs.len() == 20 {
                break 'outer;
            }
        }
    }
    assert_eq!(pairs.len(), 20);
    for (a, b, ab, ba) in &pairs {
        for (u, v, want, side) in
            [(ab, ba, b.len(), "gamma(ab,ba) = |b|"), (ba, ab, a.len(), "gamma(ba,ab) = |a|")]
        {
            match conj_free_monoid(u, v).unwrap() {
                Verdict::Yes(Witness::Conjugator(t)) => {
                    if t.len() != want {
                        bad.push(format!(
                            "{side} fails for a={:?} b={:?}: got {}, want {want}",
                            a.render(),
                            b.render(),
                            t.len()
                        ));
                    }
                }
                other => bad.push(format!("expected Yes for {side}, got {other:?}")),
            }
        }
    }

    // free monoid Gamma(m,n) claimed floor(min(m,n)/2)
    let caps = SearchCaps::new(6, 10_000, 1_000_000);
    let gam = gamma_table(&free, 6, 6, &caps, &ConjMethod::FreeMonoid).unwrap();
    for m in 0..=6usize {
        for n in 0..=6 {
            let want = (m.min(n) / 2) as u64;
            let got = cell(&gam, m, n);
            if got != want {
                bad.push(format!("Gamma({m},{n}) = {got}, claimed floor(min/2) = {want}"));
            }
        }
    }

    // free group Gamma_0(m,n) claimed floor(n/2) + 1 for m >= n >= 1
    let fg = builtin("free_group_monoid(2)").unwrap();
    let g0 = gamma0_table(&fg, 6, 6, &caps).unwrap();
    for n in 1..=6usize {
        for m in n..=6 {
            let want = (n / 2 + 1) as u64;
            let got = cell(&g0, m, n);
            if got != want {
                bad.push(format!("Gamma0({m},{n}) = {got}, claimed floor(n/2)+1 = {want}"));
            }
        }
    }
    report(4, &bad, "conjugator-length tables match the claimed closed forms");
}

#[test]
fn truth_4_conjugacy_closed_forms() {
    // measured free monoid Gamma is min(m,n) - 1: the extremal pairs are
    // (x y^k, y^k x), conjugate by y^k with no shorter conjugator
    let free = builtin("free_monoid(2)").unwrap();
    let caps = SearchCaps::new(6, 10_000, 1_000_000);
    let gam = gamma_table(&free, 6, 6, &caps, &ConjMethod::FreeMonoid).unwrap();
    for m in 0..=6usize {
        for n in 0..=6 {
            assert_eq!(cell(&gam, m, n), (m.min(n).max(1) - 1) as u64, "Gamma({m},{n})");
        }
    }

    // measured free group Gamma_0 is floor(min(m,n)/2); cross-check the
    // engine's minimal conjugators against an independent string scan on
    // every cyclically reduced pair of rotations up to length 4
    let fg = builtin("free_group_monoid(2)").unwrap();
    let g0 = gamma0_table(&fg, 6, 6, &caps).unwrap();
    for n in 0..=6usize {
        for m in n..=6 {
            assert_eq!(cell(&g0, m, n), (n / 2) as u64, "Gamma0({m},{n})");
        }
    }
    let mut checked = 0usize;
    for w in words_up_to(&fg.alphabet, 4) {
        if !w.is_cyclically_reduced().unwrap() {
            continue;
        }
        for r in w.cyclic_conjugates() {
            let got = min_conjugator_free_group(&w, &r).unwrap();
            let oracle = common::naive_min_conjugator(&w.render(), &r.render(), 4);
            assert_eq!(got, oracle, "gamma0({:?}, {:?})", w.render(), r.render());
            checked += 1;
        }
    }
    assert!(checked > 300, "only {checked} rotation pairs checked");
}

// ---------------------------------------------------------------- 5

fn rule_size_range(p: &Presentation) -> (u64, u64) {
    let sys = CompiledSystem::compile(p).unwrap();
    let sizes: Vec<u64> = sys.rules.iter().map(|r| (r.lhs.len() + r.rhs.len()) as u64).collect();
    (*sizes.iter().min().unwrap(), *sizes.iter().max().unwrap())
}

#[test]
fn criterion_5_inequality_suites() {
    let mut bad = Vec::new();
    let z3 = Presentation::from_text("kind = group\nletters = a\nrel aaa\n").unwrap();
    let named: Vec<(&str, Presentation, usize)> = vec![
        ("free_commutative_monoid(2)", builtin("free_commutative_monoid(2)").unwrap(), 5),
        ("free_commutative_monoid(3)", builtin("free_commutative_monoid(3)").unwrap(), 4),
        ("free_group_monoid(2)", builtin("free_group_monoid(2)").unwrap(), 5),
        ("free_abelian_group(2)", builtin("free_abelian_group(2)").unwrap(), 4),
        ("<a | a^3>", z3.clone(), 5),
    ];
    for (label, p, n) in &named {
        let caps = SearchCaps::new(n + 4, 10_000, 4_000_000);
        let dl = dl_table(p, *n, *n, &caps).unwrap();
        let work = work_table(p, *n, *n, &caps).unwrap();
        let sdl = sdl_table(p, *n, *n, &caps).unwrap();
        let (h, h2) = rule_size_range(p);
        for m in 0..=*n {
            for k in 0..=*n {
                let (d, w, s) = (
                    dl.get(m, k),
                    work.get(m, k),
                    sdl.get(m, k),
                );
                let (Some(d), Some(w), Some(s)) = (d, w, s) else { continue };
                if !(h * d <= w && w <= h2 * d) {
                    bad.push(format!("{label}: h*DL <= Omega <= h'*DL fails at ({m},{k}): {h}*{d} <= {w} <= {h2}*{d}"));
                }
                if !(d <= s && s <= d + w) {
                    bad.push(format!("{label}: DL <= SDL <= DL+Omega fails at ({m},{k}): {d} <= {s} <= {d}+{w}"));
                }
            }
        }
    }

    // group sandwiches and both optimality chains, n <= 6
    for (label, p, caps) in [
        ("free_abelian_group(2)", builtin("free_abelian_group(2)").unwrap(), SearchCaps::new(10, 10_000, 4_000_000)),
        ("<a | a^3>", z3, SearchCaps::new(10, 10_000, 4_000_000)),
    ] {
        let r = check_opti(&p, 6, &caps).unwrap();
        for (n, name) in r.violations() {
            bad.push(format!("{label}: optimality chain `{name}` fails at n = {n}"));
        }
    }
    report(5, &bad, "cost-model sandwiches and optimality chains hold on all non-truncated cells");
}

#[test]
fn truth_5_sandwiches_hold_and_chains_hold_for_positive_area() {
    // the sandwich inequalities hold everywhere; the polynomial chains
    // bounding DL(n,0) and Omega(n,0) by the area hold whenever the area
    // at n is nonzero, and fail exactly on the degenerate rows where the
    // area is 0 but nontrivial relations already exist below length n
    // (the right-hand side is then negative)
    let z3 = Presentation::from_text("kind = group\nletters = a\nrel aaa\n").unwrap();
    let fa = builtin("free_abelian_group(2)").unwrap();
    let caps = SearchCaps::new(10, 10_000, 4_000_000);
    for (p, degenerate) in [(&fa, vec![1usize, 2, 3]), (&z3, vec![1, 2])] {
        let r = check_opti(p, 6, &caps).unwrap();
        for row in &r.rows {
            assert_eq!(row.area_le_dl, Some(true), "area <= dl0 at n = {}", row.n);
            assert_eq!(row.gwork_le_omega, Some(true), "gwork <= omega0 at n = {}", row.n);
        }
        let failing: Vec<usize> = {
            let mut ns: Vec<usize> = r.violations().into_iter().map(|(n, _)| n).collect();
            ns.dedup();
            ns
        };
        assert_eq!(failing, degenerate);
        for row in &r.rows {
            if row.area.unwrap_or(0) > 0 {
                assert_eq!(row.cubic, Some(true), "cubic chain at n = {}", row.n);
                assert_eq!(row.quadratic_dl, Some(true), "quadratic dl chain at n = {}", row.n);
                assert_eq!(row.quadratic_omega, Some(true), "quadratic omega chain at n = {}", row.n);
            }
        }
    }
}

// ---------------------------------------------------------------- 6

#[test]
fn criterion_6_tietze_invariance() {
    let mut bad = Vec::new();
    let caps = SearchCaps::new(12, 10_000, 1_000_000);
    let p = builtin("free_commutative_monoid(2)").unwrap();

    // T1 with the derivable relation aab = aba, measured constant c = 1
    let t1 = TietzeMove::T1Add { relations: vec!["aab = aba".into()] };
    let p_t1 = apply(&p, &t1, &caps).unwrap();
    for cm in [CostModel::Steps, CostModel::Work] {
        let r = check_t1_inequality(&p, &p_t1, 1, 4, 4, &caps, cm).unwrap();
        if !r.holds() {
            bad.push(format!("T1 inequality ({cm:?}, c = 1): {r:?}"));
        }
    }
    // T2 back: same bound in the other direction
    let back = apply(&p_t1, &TietzeMove::T2Remove { relations: vec!["aab = aba".into()] }, &caps).unwrap();
    if back.content_hash() != p.content_hash() {
        bad.push("T1/T2 round trip does not restore the presentation".into());
    }
    for cm in [CostModel::Steps, CostModel::Work] {
        let r = check_t1_inequality(&p_t1, &back, 1, 4, 4, &caps, cm).unwrap();
        if !r.holds() {
            bad.push(format!("T2 inequality ({cm:?}, c = 1): {r:?}"));
        }
    }

    // T3 with y = ab, defining length c = 2
    let t3 = TietzeMove::T3AddGenerators { definitions: vec![("y".into(), "ab".into())] };
    let p_t3 = apply(&p, &t3, &caps).unwrap();
    for cm in [CostModel::Steps, CostModel::Work] {
        let r = check_t3_inequality(&p, &p_t3, 2, 4, 4, &caps, cm).unwrap();
        if !r.holds() {
            bad.push(format!("T3 inequality ({cm:?}, c = 2): {r:?}"));
        }
    }
    let lb = check_length_bridge(&p, &p_t3, 2, 4, &caps).unwrap();
    if !lb.is_empty() {
        bad.push(format!("length bridge: {lb:?}"));
    }
    let back3 = apply(&p_t3, &TietzeMove::T4RemoveGenerators { names: vec!["y".into()] }, &caps).unwrap();
    if back3.content_hash() != p.content_hash() {
        bad.push("T3/T4 round trip does not restore the presentation".into());
    }

    // conjugator-length and distortion tables transport across T3 with
    // the same constant
    let gens = vec![p.alphabet.parse_word("ab").unwrap()];
    let gens_ext = vec![p_t3.alphabet.parse_word("ab").unwrap()];
    let search_base = WpMethod::Search(SearchCaps::new(10, 10_000, 1_000_000));
    let search_ext = WpMethod::Search(SearchCaps::new(12, 10_000, 1_000_000));
    let r = check_gamma_dist_invariance(
        &p,
        &p_t3,
        &gens,
        &gens_ext,
        2,
        4,
        &SearchCaps::new(10, 10_000, 1_000_000),
        &ConjMethod::Bounded { max_t: 4, wp: search_base.clone() },
        &ConjMethod::Bounded { max_t: 4, wp: search_ext.clone() },
        &search_base,
        &search_ext,
    )
    .unwrap();
    if !r.holds() {
        bad.push(format!("Gamma/Dist invariance: {r:?}"));
    }
    report(6, &bad, "T1/T3 inequalities, length bridge, Gamma/Dist bounds and round trips");
}

// ---------------------------------------------------------------- 7

/// Deterministically sampled minimal derivations of at most 5 steps: for
/// each start word, one target is picked from its 5-step ball and the
/// shortest derivation to it is taken. Minimality matters: an arbitrary
/// walk may insert a relator and immediately delete the same edges, and
/// the two resulting faces glue into a sphere rather than a disc.
fn sample_derivations(p: &Presentation, start_len: usize, want: usize) -> Vec<Derivation> {
    let sys = CompiledSystem::compile(p).unwrap();
    let caps = SearchCaps::new(start_len + 6, 5, 200_000);
    let mut out = Vec::new();
    for (i, u) in words_up_to(&sys.alphabet, start_len).iter().enumerate() {
        let closure = cost_closure(u, &sys, CostModel::Steps, &caps, None).unwrap();
        let targets: Vec<Word> = closure
            .iter()
            .filter(|(_, c)| *c >= 1)
            .map(|(ls, _)| Word::from_letters(sys.alphabet.clone(), ls.to_vec()))
            .collect();
        if targets.is_empty() {
            continue;
        }
        let v = &targets[(i * 2654435761) % targets.len()];
        match min_cost_derivation(u, v, p, CostModel::Steps, &caps).unwrap() {
            SearchResult::Found { derivation, .. } => out.push(derivation),
            _ => continue,
        }
        if out.len() == want {
            break;
        }
    }
    out
}

#[test]
fn criterion_7_diagrams_from_sampled_derivations() {
    let z3 = Presentation::from_text("kind = group\nletters = a\nrel aaa\n").unwrap();
    let mut bad = Vec::new();
    let mut total = 0usize;
    for (p, start_len, want) in [
        (builtin("free_commutative_monoid(2)").unwrap(), 4, 30),
        (builtin("free_group_monoid(2)").unwrap(), 3, 30),
        (builtin("free_abelian_group(2)").unwrap(), 2, 21),
        (z3, 4, 30),
    ] {
        for d in sample_derivations(&p, start_len, want) {
            total += 1;
            let label = format!("{:?} from {:?} ({} steps)", p.kind, d.start.render(), d.len());
            let diagram = match pres_core::diagrams::build_diagram(&d, &p) {
                Ok(g) => g,
                Err(e) => {
                    bad.push(format!("{label}: build failed: {e}"));
                    continue;
                }
            };
            let issues = diagram.validate(Some(&p));
            if !issues.is_empty() {
                bad.push(format!("{label}: {issues:?}"));
            }
            let relation_steps =
                d.steps.iter().filter(|s| s.origin != RuleOrigin::Free).count();
            if diagram.face_count() != relation_steps {
                bad.push(format!(
                    "{label}: {} faces for {relation_steps} relation-applying steps",
                    diagram.face_count()
                ));
            }
        }
    }
    assert!(total >= 100, "only {total} derivations sampled");
    report(
        7,
        &bad,
        &format!("{total} sampled derivations all yield valid diagrams, one face per relation-applying step"),
    );
}

// ---------------------------------------------------------------- 8

#[test]
fn criterion_8_word_problem_matches_oracles() {
    let mut bad = Vec::new();
    let caps_note: &str;

    // the two monoid presentations: every ordered pair up to length 6,
    // decided by the bounded solver with a valid derivational-length bound
    {
        let p = builtin("free_monoid(2)").unwrap();
        let f = BoundFunction::new(BoundedQuantity::Dl, "0", |_| 0);
        let words = words_up_to(&p.alphabet, 6);
        let mut pairs = 0usize;
        for u in &words {
            for v in &words {
                pairs += 1;
                let got = wp_bounded(u, v, &p, &f).unwrap();
                let want = u.render() == v.render();
                if matches!(got, Verdict::Unknown(_)) || got.is_yes() != want {
                    bad.push(format!("free monoid: {:?} ~ {:?}: {got:?}", u.render(), v.render()));
                }
            }
        }
        assert_eq!(pairs, 127 * 127);
    }
    {
        let p = builtin("free_commutative_monoid(2)").unwrap();
        // adjacent transpositions sort any word: mn always suffices
        let f = BoundFunction::new(BoundedQuantity::Dl, "m*n", |a| a[0] * a[1]);
        let words = words_up_to(&p.alphabet, 6);
        for u in &words {
            for v in &words {
                let got = wp_bounded(u, v, &p, &f).unwrap();
                let want = common::sorted_key(&srender(u)) == common::sorted_key(&srender(v));
                if matches!(got, Verdict::Unknown(_)) || got.is_yes() != want {
                    bad.push(format!("commutative: {:?} ~ {:?}: {got:?}", u.render(), v.render()));
                }
            }
        }
    }

    // the two group presentations have 5461 words up to length 6, so the
    // 29.8 million ordered pairs are compared classwise: the bounded
    // congruence partition (built with per-presentation headroom for
    // longer intermediate words) must induce exactly the oracle's
    // equivalence on all of them, and the
    // bounded solver is additionally run pairwise on a short-word slice
    // (longer slices are feasible but slow: the cost cap admits relator
    // insertions, so per-pair balls grow quickly with the bound)
    for (name, depth, key, spot_len, spot_bound) in [
        (
            "free_group_monoid(2)",
            8usize,
            Box::new(|w: &str| common::free_group_key(w)) as Box<dyn Fn(&str) -> String>,
            2usize,
            Box::new(|a: &[u64]| a[0] / 2 + a[1] / 2)
                as Box<dyn Fn(&[u64]) -> u64 + Send + Sync>,
        ),
        (
            "free_abelian_group(2)",
            // sorting a capital-heavy word past another letter inserts a
            // whole relator first, so intermediates need +4 headroom
            10,
            Box::new(|w: &str| format!("{:?}", common::abelian_key(w))),
            2,
            // worst dl among equal pairs up to length 2 is 3 (aB vs Ba);
            // an invalid bound would surface below as a No verdict on a
            // pair the oracle calls equal
            Box::new(|a: &[u64]| (a[0] + a[1]) / 2 + 1),
        ),
    ] {
        let p = builtin(name).unwrap();
        let part = ClassPartition::build(&p, depth).unwrap();
        let mut class_to_key: std::collections::HashMap<usize, String> = Default::default();
        let mut key_to_class: std::collections::HashMap<String, usize> = Default::default();
        let mut words = 0usize;
        for w in words_up_to(&p.alphabet, 6) {
            words += 1;
            let c = part.class(&w).unwrap();
            let k = key(&srender(&w));
            if let Some(prev) = class_to_key.insert(c, k.clone()) {
                if prev != k {
                    bad.push(format!("{name}: connected words {prev:?} and {k:?} have different normal forms"));
                }
            }
            if let Some(prev) = key_to_class.insert(k.clone(), c) {
                if prev != c {
                    bad.push(format!("{name}: words with normal form {k:?} in two different classes"));
                }
            }
        }
        assert_eq!(words, 5461);

        let f = BoundFunction::new(BoundedQuantity::Dl, "spot", spot_bound);
        for u in words_up_to(&p.alphabet, spot_len) {
            for v in words_up_to(&p.alphabet, spot_len) {
                let got = wp_bounded(&u, &v, &p, &f).unwrap();
                let want = key(&srender(&u)) == key(&srender(&v));
                if matches!(got, Verdict::Unknown(_)) || got.is_yes() != want {
                    bad.push(format!("{name}: {:?} ~ {:?}: {got:?}", u.render(), v.render()));
                }
            }
        }
    }
    caps_note = "16129 + 16129 solver pairs, 2 x 29.8M classwise pairs, pairwise spot slices";
    report(8, &bad, caps_note);
}

// ---------------------------------------------------------------- 9

#[test]
fn criterion_9_tables_independent_of_thread_count() {
    let p = builtin("free_commutative_monoid(2)").unwrap();
    let caps = SearchCaps::new(6, 10_000, 1_000_000);
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| dl_table(&p, 5, 5, &caps).unwrap())
    };
    let one = run(1);
    let four = run(4);
    let four_again = run(4);
    let mut bad = Vec::new();
    if one.to_csv() != four.to_csv() || four.to_csv() != four_again.to_csv() {
        bad.push("CSV output differs across thread counts or reruns".to_string());
    }
    if format!("{}", one.to_json()) != format!("{}", four.to_json()) {
        bad.push("JSON output differs across thread counts".to_string());
    }
    report(9, &bad, "tables byte-identical across 1 and 4 threads and across reruns (CLI covered in pres-cli tests)");
}
