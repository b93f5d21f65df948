//! Size invariants of presentations as finite tables: worst-case
//! derivation length / work / weighted length between related words,
//! relator area, conjugator length and subgroup distortion, plus
//! comparators for asymptotic domination between tables.
//!
//! Cells are `Option<u64>`: `None` renders as the truncation marker `T`
//! and means the search hit a cost or state cap, so the true value is only
//! known to be at least what was seen. All other cells are exact relative
//! to the recorded caps (in particular to `max_word_length`, which bounds
//! the intermediate words a derivation may use).

use rayon::prelude::*;

use crate::decision::{conj_free_monoid, min_conjugator_free_group, Verdict, Witness, WpMethod};
use crate::presentations::Presentation;
use crate::rewrite::{cost_closure, CompiledSystem, CostModel, RewriteError, SearchCaps};
use crate::words::{words_up_to, LetterId, Word};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Decision(#[from] crate::decision::DecisionError),
    #[error(transparent)]
    Word(#[from] crate::words::WordError),
    #[error(transparent)]
    Presentation(#[from] crate::presentations::PresentationError),
    #[error("tables have different dimensions: {0:?} vs {1:?}")]
    DimensionMismatch(Vec<usize>, Vec<usize>),
    #[error("malformed table document: {0}")]
    BadDocument(String),
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct TableMeta {
    /// Content hash of the presentation the table was computed from.
    pub presentation: String,
    pub caps: SearchCaps,
    pub cost_model: Option<CostModel>,
    /// Free-form description of how cells were computed.
    pub method: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1D {
    pub values: Vec<Option<u64>>,
    pub meta: TableMeta,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table2D {
    pub rows: usize,
    pub cols: usize,
    pub values: Vec<Option<u64>>,
    pub meta: TableMeta,
}

impl Table1D {
    pub fn get(&self, n: usize) -> Option<u64> {
        self.values.get(n).copied().flatten()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_monotone(&self) -> bool {
        self.values
            .windows(2)
            .all(|w| match (w[0], w[1]) {
                (Some(a), Some(b)) => a <= b,
                _ => true,
            })
    }

    pub fn to_csv(&self) -> String {
        let mut out = meta_comment(&self.meta);
        out.push_str("n,value\n");
        for (n, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{n},{}\n", cell(v)));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "meta": self.meta, "values": self.values })
    }
}

impl Table2D {
    pub fn get(&self, m: usize, n: usize) -> Option<u64> {
        if m < self.rows && n < self.cols {
            self.values[m * self.cols + n]
        } else {
            None
        }
    }

    pub fn is_monotone(&self) -> bool {
        (0..self.rows).all(|m| {
            (0..self.cols).all(|n| {
                let here = self.get(m, n);
                let up = if m > 0 { self.get(m - 1, n) } else { Some(0) };
                let left = if n > 0 { self.get(m, n - 1) } else { Some(0) };
                match here {
                    None => true,
                    Some(h) => up.map_or(true, |u| u <= h) && left.map_or(true, |l| l <= h),
                }
            })
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = meta_comment(&self.meta);
        out.push_str("m\\n");
        for n in 0..self.cols {
            out.push_str(&format!(",{n}"));
        }
        out.push('\n');
        for m in 0..self.rows {
            out.push_str(&m.to_string());
            for n in 0..self.cols {
                out.push_str(&format!(",{}", cell(&self.get(m, n))));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<Option<u64>>> = (0..self.rows)
            .map(|m| (0..self.cols).map(|n| self.get(m, n)).collect())
            .collect();
        serde_json::json!({ "meta": self.meta, "values": rows })
    }
}

fn cell(v: &Option<u64>) -> String {
    match v {
        Some(x) => x.to_string(),
        None => "T".to_string(),
    }
}

fn meta_comment(meta: &TableMeta) -> String {
    format!(
        "# presentation = {}\n# caps = length {} cost {} states {}\n# cost_model = {}\n# method = {}\n",
        meta.presentation,
        meta.caps.max_word_length,
        meta.caps.max_cost,
        meta.caps.max_states,
        meta.cost_model.map(|c| format!("{c:?}")).unwrap_or_else(|| "-".into()),
        meta.method,
    )
}

fn prefix_max_2d(raw: &[Vec<Option<u64>>], trunc_rows: &[bool], table: &mut Table2D) {
    // table(m, n) = max of raw over m' <= m, n' <= n; a truncated source
    // row poisons every cell at or above its length
    for m in 0..table.rows {
        for n in 0..table.cols {
            let mut best = 0u64;
            let mut top = false;
            for m2 in 0..=m {
                if trunc_rows[m2] {
                    top = true;
                }
                for n2 in 0..=n {
                    match raw[m2][n2] {
                        Some(v) => best = best.max(v),
                        None => {}
                    }
                }
            }
            table.values[m * table.cols + n] = if top { None } else { Some(best) };
        }
    }
}

/// Worst minimum cost of a derivation between related words of lengths at
/// most `(m, n)`, for all `m <= n1`, `n <= n2`. The maximum runs over every
/// pair that is provably related within the caps; group presentations are
/// routed through their corresponding monoid presentation.
pub fn cost_table(
    p: &Presentation,
    n1: usize,
    n2: usize,
    caps: &SearchCaps,
    cm: CostModel,
) -> Result<Table2D, InvariantError> {
    let sys = CompiledSystem::compile(p)?;
    let sources = words_up_to(&sys.alphabet, n1);
    let per_source: Vec<Result<(usize, Vec<Option<u64>>, bool), RewriteError>> = sources
        .par_iter()
        .map(|u| {
            let closure = cost_closure(u, &sys, cm, caps, None)?;
            let mut row: Vec<Option<u64>> = vec![None; n2 + 1];
            for (w, c) in closure.iter() {
                if w.len() <= n2 {
                    let slot = &mut row[w.len()];
                    *slot = Some(slot.map_or(c, |old| old.max(c)));
                }
            }
            Ok((u.len(), row, closure.truncated))
        })
        .collect();

    let mut raw: Vec<Vec<Option<u64>>> = vec![vec![None; n2 + 1]; n1 + 1];
    let mut trunc = vec![false; n1 + 1];
    for r in per_source {
        let (len_u, row, truncated) = r?;
        trunc[len_u] |= truncated;
        for (len_v, v) in row.into_iter().enumerate() {
            if let Some(v) = v {
                let slot = &mut raw[len_u][len_v];
                *slot = Some(slot.map_or(v, |old| old.max(v)));
            }
        }
    }

    let mut table = Table2D {
        rows: n1 + 1,
        cols: n2 + 1,
        values: vec![Some(0); (n1 + 1) * (n2 + 1)],
        meta: TableMeta {
            presentation: p.content_hash(),
            caps: *caps,
            cost_model: Some(cm),
            method: "per-source cost closure over the symmetrized system".into(),
        },
    };
    prefix_max_2d(&raw, &trunc, &mut table);
    Ok(table)
}

pub fn dl_table(
    p: &Presentation,
    n1: usize,
    n2: usize,
    caps: &SearchCaps,
) -> Result<Table2D, InvariantError> {
    cost_table(p, n1, n2, caps, CostModel::Steps)
}

pub fn work_table(
    p: &Presentation,
    n1: usize,
    n2: usize,
    caps: &SearchCaps,
) -> Result<Table2D, InvariantError> {
    cost_table(p, n1, n2, caps, CostModel::Work)
}

pub fn sdl_table(
    p: &Presentation,
    n1: usize,
    n2: usize,
    caps: &SearchCaps,
) -> Result<Table2D, InvariantError> {
    cost_table(p, n1, n2, caps, CostModel::Sdl)
}

/// One-sided worst cost of deriving a word of length `<= n` from the empty
/// word: the `(n, 0)` column of [`cost_table`] computed with a single
/// closure. With `only_reduced` the maximum is restricted to freely
/// reduced words, which for `AreaSteps` is the Dehn table.
pub fn one_sided_table(
    p: &Presentation,
    n: usize,
    caps: &SearchCaps,
    cm: CostModel,
    only_reduced: bool,
) -> Result<Table1D, InvariantError> {
    let sys = CompiledSystem::compile(p)?;
    let one = Word::empty(sys.alphabet.clone());
    let closure = cost_closure(&one, &sys, cm, caps, None)?;
    let mut raw = vec![0u64; n + 1];
    for (w, c) in closure.iter() {
        if w.len() > n {
            continue;
        }
        if only_reduced {
            let word = Word::from_letters(sys.alphabet.clone(), w.to_vec());
            if !word.is_reduced()? {
                continue;
            }
        }
        raw[w.len()] = raw[w.len()].max(c);
    }
    let mut values: Vec<Option<u64>> = Vec::with_capacity(n + 1);
    let mut best = 0;
    for &v in &raw {
        best = best.max(v);
        values.push(if closure.truncated { None } else { Some(best) });
    }
    Ok(Table1D {
        values,
        meta: TableMeta {
            presentation: p.content_hash(),
            caps: *caps,
            cost_model: Some(cm),
            method: format!(
                "single closure from the empty word{}",
                if only_reduced { ", reduced targets only" } else { "" }
            ),
        },
    })
}

/// Dehn table: worst relator area over freely reduced relators of length
/// `<= n`. Relators are detected as reduced words reachable from the empty
/// word within the caps.
pub fn dehn_table(p: &Presentation, n: usize, caps: &SearchCaps) -> Result<Table1D, InvariantError> {
    one_sided_table(p, n, caps, CostModel::AreaSteps, true)
}

/// Like [`dehn_table`] with relator applications weighted by relator
/// length.
pub fn gwork_table(p: &Presentation, n: usize, caps: &SearchCaps) -> Result<Table1D, InvariantError> {
    one_sided_table(p, n, caps, CostModel::GworkSteps, true)
}

/// The partition of all words of length at most `max_len` into classes of
/// the congruence generated by the rules, restricted to derivations whose
/// intermediate words also stay within `max_len`. A refinement of the true
/// congruence: words in the same class are certainly related, words in
/// different classes might still be related through longer intermediates.
pub struct ClassPartition {
    alphabet: std::sync::Arc<crate::words::Alphabet>,
    index: std::collections::HashMap<Vec<LetterId>, usize>,
    class_of: Vec<usize>,
}

impl ClassPartition {
    /// Union-find pass over the bounded rewrite graph. Group
    /// presentations are routed through their corresponding monoid
    /// presentation.
    pub fn build(p: &Presentation, max_len: usize) -> Result<ClassPartition, InvariantError> {
        let sys = CompiledSystem::compile(p)?;
        let words = words_up_to(&sys.alphabet, max_len);
        let index: std::collections::HashMap<Vec<LetterId>, usize> = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.letters().to_vec(), i))
            .collect();
        let mut parent: Vec<usize> = (0..words.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (i, w) in words.iter().enumerate() {
            for (_, _, next) in sys.successors(w.letters()) {
                if let Some(&j) = index.get(&next) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut class_of = vec![0usize; words.len()];
        for (i, slot) in class_of.iter_mut().enumerate() {
            *slot = find(&mut parent, i);
        }
        Ok(ClassPartition { alphabet: sys.alphabet.clone(), index, class_of })
    }

    /// Class id of a word, or `None` if it is longer than the partition's
    /// cap.
    pub fn class(&self, w: &Word) -> Option<usize> {
        self.index.get(w.letters()).map(|&i| self.class_of[i])
    }

    /// Whether two words are provably related within the partition's
    /// length cap. `None` when either word exceeds the cap.
    pub fn related(&self, u: &Word, v: &Word) -> Option<bool> {
        Some(self.class(u)? == self.class(v)?)
    }

    pub fn alphabet(&self) -> &std::sync::Arc<crate::words::Alphabet> {
        &self.alphabet
    }
}

/// How conjugacy and minimal conjugators are decided when building a
/// conjugator-length table.
#[derive(Debug, Clone)]
pub enum ConjMethod {
    /// Rotation scan; exact for free monoids.
    FreeMonoid,
    /// Scan conjugators up to `max_t` letters, deciding each equation with
    /// `wp`. Exact only if `max_t` really bounds minimal conjugators.
    Bounded { max_t: usize, wp: WpMethod },
}

/// Worst minimal conjugator length over ordered conjugate pairs with
/// `|a1| <= m`, `|a2| <= n`.
pub fn gamma_table(
    p: &Presentation,
    n1: usize,
    n2: usize,
    caps: &SearchCaps,
    method: &ConjMethod,
) -> Result<Table2D, InvariantError> {
    let mut raw: Vec<Vec<Option<u64>>> = vec![vec![None; n2 + 1]; n1 + 1];
    match method {
        ConjMethod::Bounded { max_t, wp: WpMethod::Search(s) } => {
            // minimal conjugator length only depends on the congruence
            // classes of the two words, so compute it once per class pair
            // from one bounded partition instead of once per word pair
            let part = ClassPartition::build(p, s.max_word_length)?;
            let mut reps: std::collections::HashMap<usize, Word> = Default::default();
            let mut lengths: std::collections::HashMap<usize, Vec<usize>> = Default::default();
            for w in words_up_to(&p.alphabet, n1.max(n2)) {
                if let Some(c) = part.class(&w) {
                    reps.entry(c).or_insert_with(|| w.clone());
                    let ls = lengths.entry(c).or_default();
                    if !ls.contains(&w.len()) {
                        ls.push(w.len());
                    }
                }
            }
            let ts = words_up_to(&p.alphabet, *max_t);
            for (c1, rep1) in &reps {
                for (c2, rep2) in &reps {
                    let mut gamma = None;
                    'scan: for t in &ts {
                        let lhs = t.concat(rep1)?;
                        let rhs = rep2.concat(t)?;
                        if part.related(&lhs, &rhs) == Some(true) {
                            gamma = Some(t.len() as u64);
                            break 'scan;
                        }
                    }
                    if let Some(g) = gamma {
                        for &m in &lengths[c1] {
                            for &n in &lengths[c2] {
                                if m <= n1 && n <= n2 {
                                    let slot = &mut raw[m][n];
                                    *slot = Some(slot.map_or(g, |old| old.max(g)));
                                }
                            }
                        }
                    }
                }
            }
        }
        _ => {
            let words1 = words_up_to(&p.alphabet, n1);
            let words2 = words_up_to(&p.alphabet, n2);
            for a1 in &words1 {
                for a2 in &words2 {
                    let gamma = match method {
                        ConjMethod::FreeMonoid => match conj_free_monoid(a1, a2)? {
                            Verdict::Yes(Witness::Conjugator(t)) => Some(t.len() as u64),
                            _ => None,
                        },
                        ConjMethod::Bounded { max_t, wp } => {
                            let mut found = None;
                            'scan: for t in words_up_to(&p.alphabet, *max_t) {
                                let lhs = t.concat(a1)?;
                                let rhs = a2.concat(&t)?;
                                if wp.decide(p, &lhs, &rhs)?.is_yes() {
                                    found = Some(t.len() as u64);
                                    break 'scan;
                                }
                            }
                            found
                        }
                    };
                    if let Some(g) = gamma {
                        let slot = &mut raw[a1.len()][a2.len()];
                        *slot = Some(slot.map_or(g, |old| old.max(g)));
                    }
                }
            }
        }
    }
    let mut table = Table2D {
        rows: n1 + 1,
        cols: n2 + 1,
        values: vec![Some(0); (n1 + 1) * (n2 + 1)],
        meta: TableMeta {
            presentation: p.content_hash(),
            caps: *caps,
            cost_model: None,
            method: format!("minimal conjugator scan, {method:?}"),
        },
    };
    prefix_max_2d(&raw, &vec![false; n1 + 1], &mut table);
    Ok(table)
}

/// Worst minimal reduced conjugator length over conjugate pairs of
/// cyclically reduced words in a free group, `|a1| <= m`, `|a2| <= n`.
pub fn gamma0_table(
    p: &Presentation,
    n1: usize,
    n2: usize,
    caps: &SearchCaps,
) -> Result<Table2D, InvariantError> {
    let mut raw: Vec<Vec<Option<u64>>> = vec![vec![None; n2 + 1]; n1 + 1];
    let all = words_up_to(&p.alphabet, n1.max(n2));
    let cyc: Vec<&Word> = all
        .iter()
        .filter(|w| w.is_cyclically_reduced().unwrap_or(false))
        .collect();
    for &a1 in &cyc {
        if a1.len() > n1 {
            continue;
        }
        // conjugate cyclically reduced words are exactly the rotations
        for a2 in a1.cyclic_conjugates() {
            if a2.len() > n2 {
                continue;
            }
            if let Some(g) = min_conjugator_free_group(a1, &a2)? {
                let slot = &mut raw[a1.len()][a2.len()];
                *slot = Some(slot.map_or(g, |old| old.max(g)));
            }
        }
    }
    let mut table = Table2D {
        rows: n1 + 1,
        cols: n2 + 1,
        values: vec![Some(0); (n1 + 1) * (n2 + 1)],
        meta: TableMeta {
            presentation: p.content_hash(),
            caps: *caps,
            cost_model: None,
            method: "minimal reduced conjugator over rotation pairs".into(),
        },
    };
    prefix_max_2d(&raw, &vec![false; n1 + 1], &mut table);
    Ok(table)
}

/// Distortion table of the submonoid generated by `gens`: for every word
/// `w` of length `<= n` lying in the submonoid, the least number of
/// factors expressing it; cells are maxima over `|w| <= n`. `bound(|w|)`
/// caps the factor scan.
pub fn dist_table(
    p: &Presentation,
    gens: &[Word],
    n: usize,
    caps: &SearchCaps,
    wp: &WpMethod,
    bound: &dyn Fn(u64) -> u64,
) -> Result<Table1D, InvariantError> {
    let mut raw = vec![0u64; n + 1];
    for w in words_up_to(&p.alphabet, n) {
        if let Some(l) =
            crate::decision::length_over(&w, gens, p, bound(w.len() as u64), wp)?
        {
            raw[w.len()] = raw[w.len()].max(l);
        }
    }
    let mut values = Vec::with_capacity(n + 1);
    let mut best = 0;
    for &v in &raw {
        best = best.max(v);
        values.push(Some(best));
    }
    Ok(Table1D {
        values,
        meta: TableMeta {
            presentation: p.content_hash(),
            caps: *caps,
            cost_model: None,
            method: "shortest factorization scan".into(),
        },
    })
}

/// A uniform view of 1- and 2-dimensional tables for the comparators.
pub trait TableLike {
    fn dims(&self) -> Vec<usize>;
    fn at(&self, idx: &[usize]) -> Option<u64>;
}

impl TableLike for Table1D {
    fn dims(&self) -> Vec<usize> {
        vec![self.values.len()]
    }
    fn at(&self, idx: &[usize]) -> Option<u64> {
        self.get(idx[0])
    }
}

impl TableLike for Table2D {
    fn dims(&self) -> Vec<usize> {
        vec![self.rows, self.cols]
    }
    fn at(&self, idx: &[usize]) -> Option<u64> {
        self.get(idx[0], idx[1])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompareReport {
    pub alpha: u64,
    pub checked: usize,
    /// Points skipped because a cell was truncated or `alpha * x` fell
    /// outside the second table.
    pub skipped: usize,
    pub violations: Vec<(Vec<usize>, u64, u64)>,
}

impl CompareReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check `f(x) <= alpha * g(alpha * x) + alpha * sum(x)` at every point of
/// `f`'s domain with all coordinates non-zero (the domination order on
/// invariant functions).
pub fn check_preceq(
    f: &dyn TableLike,
    g: &dyn TableLike,
    alpha: u64,
) -> Result<CompareReport, InvariantError> {
    let df = f.dims();
    let dg = g.dims();
    if df.len() != dg.len() {
        return Err(InvariantError::DimensionMismatch(df, dg));
    }
    let mut report = CompareReport { alpha, checked: 0, skipped: 0, violations: Vec::new() };
    for idx in points(&df) {
        if idx.iter().any(|&i| i == 0) {
            continue;
        }
        let scaled: Vec<usize> = idx.iter().map(|&i| i * alpha as usize).collect();
        if scaled.iter().zip(&dg).any(|(&s, &d)| s >= d) {
            report.skipped += 1;
            continue;
        }
        match (f.at(&idx), g.at(&scaled)) {
            (Some(fv), Some(gv)) => {
                let bound = alpha * gv + alpha * idx.iter().sum::<usize>() as u64;
                report.checked += 1;
                if fv > bound {
                    report.violations.push((idx, fv, bound));
                }
            }
            _ => report.skipped += 1,
        }
    }
    Ok(report)
}

/// Check `f(x) <= alpha * g(x)` pointwise (strong domination).
pub fn check_strong_preceq(
    f: &dyn TableLike,
    g: &dyn TableLike,
    alpha: u64,
) -> Result<CompareReport, InvariantError> {
    let df = f.dims();
    let dg = g.dims();
    if df.len() != dg.len() {
        return Err(InvariantError::DimensionMismatch(df.clone(), dg.clone()));
    }
    let dims: Vec<usize> = df.iter().zip(&dg).map(|(&a, &b)| a.min(b)).collect();
    let mut report = CompareReport { alpha, checked: 0, skipped: 0, violations: Vec::new() };
    for idx in points(&dims) {
        match (f.at(&idx), g.at(&idx)) {
            (Some(fv), Some(gv)) => {
                report.checked += 1;
                if fv > alpha * gv {
                    report.violations.push((idx, fv, alpha * gv));
                }
            }
            _ => report.skipped += 1,
        }
    }
    Ok(report)
}

fn points(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &d in dims {
        let mut next = Vec::with_capacity(out.len() * d);
        for p in &out {
            for i in 0..d {
                let mut q = p.clone();
                q.push(i);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

#[derive(Debug, Clone)]
pub struct OptiRow {
    pub n: usize,
    pub area: Option<u64>,
    pub gwork: Option<u64>,
    pub dl0: Option<u64>,
    pub omega0: Option<u64>,
    /// area(n) <= dl(n, 0)
    pub area_le_dl: Option<bool>,
    /// gwork(n) <= omega(n, 0)
    pub gwork_le_omega: Option<bool>,
    /// omega(n,0) <= 4 g^3 + g^2 + (4n+1) g - n with g = gwork(n)
    pub cubic: Option<bool>,
    /// 2 dl(n,0) <= 4 c d^2 + (4n + c + 2) d - n with d = area(n)
    pub quadratic_dl: Option<bool>,
    /// omega(n,0) <= 4 c g^2 + (4n + c + 1) g - n with g = gwork(n)
    pub quadratic_omega: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct OptiReport {
    pub max_relator_len: usize,
    pub rows: Vec<OptiRow>,
}

impl OptiReport {
    pub fn violations(&self) -> Vec<(usize, &'static str)> {
        let mut out = Vec::new();
        for r in &self.rows {
            for (flag, name) in [
                (r.area_le_dl, "area <= dl0"),
                (r.gwork_le_omega, "gwork <= omega0"),
                (r.cubic, "cubic bound on omega0"),
                (r.quadratic_dl, "quadratic bound on dl0"),
                (r.quadratic_omega, "quadratic bound on omega0"),
            ] {
                if flag == Some(false) {
                    out.push((r.n, name));
                }
            }
        }
        out
    }
}

/// Relates the one-sided derivation tables of a group presentation to its
/// area and weighted-area tables: the pointwise order both ways, with
/// polynomial upper bounds in terms of area/weighted area.
pub fn check_opti(
    p: &Presentation,
    n_max: usize,
    caps: &SearchCaps,
) -> Result<OptiReport, InvariantError> {
    let c = p.relators()?.iter().map(Word::len).max().unwrap_or(0);
    let area = dehn_table(p, n_max, caps)?;
    let gw = gwork_table(p, n_max, caps)?;
    let dl0 = one_sided_table(p, n_max, caps, CostModel::Steps, false)?;
    let om0 = one_sided_table(p, n_max, caps, CostModel::Work, false)?;
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let (a, g, d, o) = (area.get(n), gw.get(n), dl0.get(n), om0.get(n));
        let le = |x: Option<u64>, y: Option<u64>| match (x, y) {
            (Some(x), Some(y)) => Some(x <= y),
            _ => None,
        };
        let ni = n as i128;
        let cubic = match (o, g) {
            (Some(o), Some(g)) => {
                let g = g as i128;
                Some((o as i128) <= 4 * g * g * g + g * g + (4 * ni + 1) * g - ni)
            }
            _ => None,
        };
        let quadratic_dl = match (d, a) {
            (Some(d), Some(a)) => {
                let (a, ci) = (a as i128, c as i128);
                // doubled to keep c/2 and n/2 integral
                Some(2 * (d as i128) <= 4 * ci * a * a + (4 * ni + ci + 2) * a - ni)
            }
            _ => None,
        };
        let quadratic_omega = match (o, g) {
            (Some(o), Some(g)) => {
                let (g, ci) = (g as i128, c as i128);
                Some((o as i128) <= 4 * ci * g * g + (4 * ni + ci + 1) * g - ni)
            }
            _ => None,
        };
        rows.push(OptiRow {
            n,
            area: a,
            gwork: g,
            dl0: d,
            omega0: o,
            area_le_dl: le(a, d),
            gwork_le_omega: le(g, o),
            cubic,
            quadratic_dl,
            quadratic_omega,
        });
    }
    Ok(OptiReport { max_relator_len: c, rows })
}
