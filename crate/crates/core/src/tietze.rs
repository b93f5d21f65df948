//! The four elementary transformations between presentations of the same
//! monoid or group: adding/removing a redundant relation and
//! adding/removing a generator together with its defining relation. Also
//! measurement of how "large" a move is, replayable move scripts, and
//! checkers for the inequalities tying the invariant tables of the
//! original and transformed presentations together.

use std::sync::Arc;

use crate::decision::{DecisionError, WpMethod};
use crate::invariants::{
    check_strong_preceq, cost_table, dist_table, gamma_table, CompareReport, ConjMethod,
    InvariantError,
};
use crate::presentations::{Kind, Presentation, PresentationError, Rule, RuleOrigin, RuleSource};
use crate::rewrite::{
    cost_closure, min_cost_derivation, CompiledSystem, CostModel, RewriteError, SearchCaps,
    SearchResult,
};
use crate::words::{Alphabet, RelationPair, Word, WordError};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum TietzeError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Decision(#[from] DecisionError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("relation {0} is not derivable from the remaining rules within the caps")]
    NotDerivable(String),
    #[error("cannot certify that relation {0} is derivable within the caps")]
    NotCertified(String),
    #[error("relation {0} is not among the presentation's rules")]
    NoSuchRelation(String),
    #[error("generator name {0} is already in use")]
    NameInUse(String),
    #[error("no generator named {0}")]
    NoSuchGenerator(String),
    #[error("no defining relation isolating generator {0}")]
    NoDefiningRelation(String),
    #[error("moves need a finitely listed rule set")]
    NotFinite,
    #[error("script line {0}: {1}")]
    Script(usize, String),
    #[error("relation for a monoid presentation must be written `U = V`")]
    MonoidNeedsPair,
}

/// One elementary move. Relation and word payloads are kept as text and
/// parsed against the alphabet current at application time, so scripts
/// can reference generators introduced by earlier moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TietzeMove {
    /// Add relations that already hold (`U = V`, or a relator `W` for
    /// group presentations).
    T1Add { relations: Vec<String> },
    /// Remove relations that remain derivable from the rest.
    T2Remove { relations: Vec<String> },
    /// Add fresh generators with defining words over the existing letters.
    T3AddGenerators { definitions: Vec<(String, String)> },
    /// Remove generators that have a defining relation, substituting their
    /// defining words everywhere else.
    T4RemoveGenerators { names: Vec<String> },
}

impl TietzeMove {
    pub fn kind_name(&self) -> &'static str {
        match self {
            TietzeMove::T1Add { .. } => "T1",
            TietzeMove::T2Remove { .. } => "T2",
            TietzeMove::T3AddGenerators { .. } => "T3",
            TietzeMove::T4RemoveGenerators { .. } => "T4",
        }
    }
}

/// Size of a move: for T1/T2 the worst search cost of the touched
/// relations under each applicable cost model, for T3/T4 the longest
/// defining word. `certified` is false when any contributing search hit a
/// cost or state cap, in which case the corresponding maxima are `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub move_kind: &'static str,
    pub dl: Option<u64>,
    pub work: Option<u64>,
    /// Relator-count cost; groups only.
    pub area: Option<u64>,
    /// Length-weighted relator cost; groups only.
    pub gwork: Option<u64>,
    /// Longest defining word; T3/T4 only.
    pub length: Option<u64>,
    pub caps: SearchCaps,
    pub certified: bool,
}

impl BoundReport {
    /// The constant `c` the transformation inequalities are stated with:
    /// the dl bound for T1/T2 and the length bound for T3/T4.
    pub fn bound(&self) -> Option<u64> {
        match self.move_kind {
            "T1" | "T2" => self.dl,
            _ => self.length,
        }
    }
}

/// A relation payload parsed against a concrete presentation: a pair for
/// monoids, a relator for groups (a pair `U = V` becomes `U V^-1`).
fn parse_relation(p: &Presentation, text: &str) -> Result<ParsedRelation, TietzeError> {
    match text.split_once('=') {
        Some((l, r)) => {
            let lhs = p.alphabet.parse_word(l.trim())?;
            let rhs = p.alphabet.parse_word(r.trim())?;
            match p.kind {
                Kind::Monoid => Ok(ParsedRelation::Pair(RelationPair::new(lhs, rhs)?)),
                Kind::Group => Ok(ParsedRelation::Relator(lhs.concat(&rhs.inverse()?)?.free_reduce()?)),
            }
        }
        None => match p.kind {
            Kind::Monoid => Err(TietzeError::MonoidNeedsPair),
            Kind::Group => Ok(ParsedRelation::Relator(p.alphabet.parse_word(text.trim())?)),
        },
    }
}

enum ParsedRelation {
    Pair(RelationPair),
    Relator(Word),
}

impl ParsedRelation {
    fn render(&self) -> String {
        match self {
            ParsedRelation::Pair(p) => p.render(),
            ParsedRelation::Relator(w) => w.render(),
        }
    }
}

/// Certify that a relation holds in `p`, i.e. that the two sides are
/// related (for a relator: that it is related to the empty word).
fn certify(p: &Presentation, rel: &ParsedRelation, caps: &SearchCaps) -> Result<SearchResult, TietzeError> {
    let (u, v) = match rel {
        ParsedRelation::Pair(pair) => (pair.lhs.clone(), pair.rhs.clone()),
        ParsedRelation::Relator(w) => (w.clone(), Word::empty(p.alphabet.clone())),
    };
    Ok(min_cost_derivation(&u, &v, p, CostModel::Steps, caps)?)
}

fn require_certified(p: &Presentation, rel: &ParsedRelation, caps: &SearchCaps) -> Result<(), TietzeError> {
    match certify(p, rel, caps)? {
        SearchResult::Found { .. } => Ok(()),
        SearchResult::NoDerivationWithinLengthCap => Err(TietzeError::NotDerivable(rel.render())),
        SearchResult::NotWithinCaps => Err(TietzeError::NotCertified(rel.render())),
    }
}

/// Carry a word to another alphabet by letter names.
fn transport(w: &Word, alpha: &Arc<Alphabet>) -> Result<Word, TietzeError> {
    let mut letters = Vec::with_capacity(w.len());
    for &l in w.letters() {
        let name = w.alphabet().name(l);
        let id = alpha
            .letter(name)
            .ok_or_else(|| TietzeError::NoSuchGenerator(name.to_string()))?;
        letters.push(id);
    }
    Ok(Word::from_letters(alpha.clone(), letters))
}

/// Replace every occurrence of letter `y` in `w` by `u` (and, when the
/// alphabet has inverses, of `y^-1` by `u^-1`), freely reducing afterwards
/// for group alphabets.
fn substitute(w: &Word, y: crate::words::LetterId, u: &Word) -> Result<Word, TietzeError> {
    let alpha = w.alphabet().clone();
    let y_inv = alpha.inverse_of(y);
    let u_inv = if y_inv.is_some() { Some(u.inverse()?) } else { None };
    let mut letters = Vec::with_capacity(w.len());
    for &l in w.letters() {
        if l == y {
            letters.extend_from_slice(u.letters());
        } else if Some(l) == y_inv {
            letters.extend_from_slice(u_inv.as_ref().unwrap().letters());
        } else {
            letters.push(l);
        }
    }
    let out = Word::from_letters(alpha.clone(), letters);
    if alpha.has_involution() {
        Ok(out.free_reduce()?)
    } else {
        Ok(out)
    }
}

/// Apply one move. T1 additions and T2 removals are certified within the
/// caps before the presentation changes; an uncertifiable move is
/// rejected so the presented monoid or group can never silently change.
pub fn apply(p: &Presentation, mv: &TietzeMove, caps: &SearchCaps) -> Result<Presentation, TietzeError> {
    match mv {
        TietzeMove::T1Add { relations } => {
            let mut out = p.clone();
            for text in relations {
                let rel = parse_relation(&out, text)?;
                require_certified(&out, &rel, caps)?;
                out = with_relation(&out, rel)?;
            }
            Ok(out)
        }
        TietzeMove::T2Remove { relations } => {
            let mut out = p.clone();
            for text in relations {
                let rel = parse_relation(&out, text)?;
                let shrunk = without_relation(&out, &rel)?;
                require_certified(&shrunk, &rel, caps)?;
                out = shrunk;
            }
            Ok(out)
        }
        TietzeMove::T3AddGenerators { definitions } => {
            let mut out = p.clone();
            for (name, def) in definitions {
                out = add_generator(&out, name, def)?;
            }
            Ok(out)
        }
        TietzeMove::T4RemoveGenerators { names } => {
            let mut out = p.clone();
            for name in names {
                out = remove_generator(&out, name)?;
            }
            Ok(out)
        }
    }
}

fn with_relation(p: &Presentation, rel: ParsedRelation) -> Result<Presentation, TietzeError> {
    match (&p.rules, rel) {
        (RuleSource::Finite(rules), ParsedRelation::Pair(pair)) => {
            let mut rules = rules.to_vec();
            rules.push(Rule { pair, origin: RuleOrigin::Plain });
            Ok(Presentation::monoid(p.alphabet.clone(), rules)?)
        }
        (RuleSource::Relators(rs), ParsedRelation::Relator(w)) => {
            let mut rs = rs.to_vec();
            rs.push(w);
            Ok(Presentation::group(p.alphabet.clone(), rs)?)
        }
        _ => Err(TietzeError::NotFinite),
    }
}

fn without_relation(p: &Presentation, rel: &ParsedRelation) -> Result<Presentation, TietzeError> {
    match (&p.rules, rel) {
        (RuleSource::Finite(rules), ParsedRelation::Pair(pair)) => {
            let before = rules.len();
            let kept: Vec<Rule> = rules
                .iter()
                .filter(|r| r.pair != *pair && r.pair.reversed() != *pair)
                .cloned()
                .collect();
            if kept.len() == before {
                return Err(TietzeError::NoSuchRelation(pair.render()));
            }
            Ok(Presentation::monoid(p.alphabet.clone(), kept)?)
        }
        (RuleSource::Relators(rs), ParsedRelation::Relator(w)) => {
            let before = rs.len();
            let kept: Vec<Word> = rs.iter().filter(|r| *r != w).cloned().collect();
            if kept.len() == before {
                return Err(TietzeError::NoSuchRelation(w.render()));
            }
            Ok(Presentation::group(p.alphabet.clone(), kept)?)
        }
        _ => Err(TietzeError::NotFinite),
    }
}

fn add_generator(p: &Presentation, name: &str, def: &str) -> Result<Presentation, TietzeError> {
    if p.alphabet.letter(name).is_some() {
        return Err(TietzeError::NameInUse(name.to_string()));
    }
    let u = p.alphabet.parse_word(def)?;
    // appending a generator keeps previous letter ids stable for both
    // monoid and interleaved group alphabets
    match &p.rules {
        RuleSource::Finite(rules) => {
            let mut names: Vec<String> = p.alphabet.names().to_vec();
            names.push(name.to_string());
            let alpha = Alphabet::monoid(&names)?;
            let mut out: Vec<Rule> = Vec::with_capacity(rules.len() + 1);
            for r in rules {
                out.push(Rule {
                    pair: RelationPair::new(
                        transport(&r.pair.lhs, &alpha)?,
                        transport(&r.pair.rhs, &alpha)?,
                    )?,
                    origin: r.origin,
                });
            }
            let y = Word::from_letters(alpha.clone(), vec![alpha.letter(name).unwrap()]);
            out.push(Rule {
                pair: RelationPair::new(y, transport(&u, &alpha)?)?,
                origin: RuleOrigin::Plain,
            });
            Ok(Presentation::monoid(alpha, out)?)
        }
        RuleSource::Relators(rs) => {
            let mut gens: Vec<String> = p
                .alphabet
                .positive_letters()
                .iter()
                .map(|&l| p.alphabet.name(l).to_string())
                .collect();
            gens.push(name.to_string());
            let alpha = Alphabet::group(&gens)?;
            let mut out = Vec::with_capacity(rs.len() + 1);
            for r in rs {
                out.push(transport(r, &alpha)?);
            }
            let y = Word::from_letters(alpha.clone(), vec![alpha.letter(name).unwrap()]);
            let relator = y.concat(&transport(&u, &alpha)?.inverse()?)?.free_reduce()?;
            out.push(relator);
            Ok(Presentation::group(alpha, out)?)
        }
        _ => Err(TietzeError::NotFinite),
    }
}

/// The defining word of `y` found in `p`'s rules: a rule `(y, u)` or
/// `(u, y)` for monoids, a relator `y u^-1` (or `y^-1 u`) for groups,
/// with `u` avoiding `y` and its inverse. Returns `(u, index of the
/// defining relation)`.
fn defining_word(p: &Presentation, y: crate::words::LetterId) -> Result<(Word, usize), TietzeError> {
    let name = p.alphabet.name(y).to_string();
    let y_inv = p.alphabet.inverse_of(y);
    let avoids = |w: &Word| w.letters().iter().all(|&l| l != y && Some(l) != y_inv);
    match &p.rules {
        RuleSource::Finite(rules) => {
            for (i, r) in rules.iter().enumerate() {
                for (a, b) in [(&r.pair.lhs, &r.pair.rhs), (&r.pair.rhs, &r.pair.lhs)] {
                    if a.letters() == [y] && avoids(b) {
                        return Ok((b.clone(), i));
                    }
                }
            }
            Err(TietzeError::NoDefiningRelation(name))
        }
        RuleSource::Relators(rs) => {
            for (i, r) in rs.iter().enumerate() {
                if r.is_empty() {
                    continue;
                }
                let first = r.letters()[0];
                let rest = r.subword(1, r.len() - 1);
                if !avoids(&rest) {
                    continue;
                }
                if first == y {
                    return Ok((rest.inverse()?, i));
                }
                if Some(first) == y_inv {
                    return Ok((rest, i));
                }
            }
            Err(TietzeError::NoDefiningRelation(name))
        }
        _ => Err(TietzeError::NotFinite),
    }
}

fn remove_generator(p: &Presentation, name: &str) -> Result<Presentation, TietzeError> {
    let y = p
        .alphabet
        .letter(name)
        .ok_or_else(|| TietzeError::NoSuchGenerator(name.to_string()))?;
    let (u, def_index) = defining_word(p, y)?;
    match &p.rules {
        RuleSource::Finite(rules) => {
            let names: Vec<String> = p
                .alphabet
                .names()
                .iter()
                .filter(|n| n.as_str() != name)
                .cloned()
                .collect();
            let alpha = Alphabet::monoid(&names)?;
            let mut out = Vec::new();
            for (i, r) in rules.iter().enumerate() {
                if i == def_index {
                    continue;
                }
                let lhs = transport(&substitute(&r.pair.lhs, y, &u)?, &alpha)?;
                let rhs = transport(&substitute(&r.pair.rhs, y, &u)?, &alpha)?;
                if lhs == rhs {
                    continue;
                }
                out.push(Rule { pair: RelationPair::new(lhs, rhs)?, origin: r.origin });
            }
            Ok(Presentation::monoid(alpha, out)?)
        }
        RuleSource::Relators(rs) => {
            let gens: Vec<String> = p
                .alphabet
                .positive_letters()
                .iter()
                .map(|&l| p.alphabet.name(l))
                .filter(|n| *n != name)
                .map(str::to_string)
                .collect();
            let alpha = Alphabet::group(&gens)?;
            let mut out = Vec::new();
            for (i, r) in rs.iter().enumerate() {
                if i == def_index {
                    continue;
                }
                let subst = substitute(r, y, &u)?;
                if subst.is_empty() {
                    continue;
                }
                out.push(transport(&subst, &alpha)?);
            }
            Ok(Presentation::group(alpha, out)?)
        }
        _ => Err(TietzeError::NotFinite),
    }
}

/// Apply a sequence of moves left to right.
pub fn apply_script(
    p: &Presentation,
    moves: &[TietzeMove],
    caps: &SearchCaps,
) -> Result<Presentation, TietzeError> {
    let mut out = p.clone();
    for mv in moves {
        out = apply(&out, mv, caps)?;
    }
    Ok(out)
}

/// Parse a move script: one move per line, `#` comments, e.g.
/// `T1 add: aab = aba`, `T2 remove: aab = aba`, `T3 add: y = ab`,
/// `T4 remove: y`.
pub fn parse_script(text: &str) -> Result<Vec<TietzeMove>, TietzeError> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: &str| TietzeError::Script(lineno + 1, msg.to_string());
        let (head, payload) = line
            .split_once(':')
            .ok_or_else(|| bad("expected `T<n> <verb>: payload`"))?;
        let payload = payload.trim().to_string();
        let mv = match head.trim().to_ascii_lowercase().as_str() {
            "t1 add" => TietzeMove::T1Add { relations: vec![payload] },
            "t2 remove" => TietzeMove::T2Remove { relations: vec![payload] },
            "t3 add" => {
                let (name, def) = payload
                    .split_once('=')
                    .ok_or_else(|| bad("T3 line must look like `T3 add: y = ab`"))?;
                TietzeMove::T3AddGenerators {
                    definitions: vec![(name.trim().to_string(), def.trim().to_string())],
                }
            }
            "t4 remove" => TietzeMove::T4RemoveGenerators { names: vec![payload] },
            other => return Err(bad(&format!("unknown move `{other}`"))),
        };
        out.push(mv);
    }
    Ok(out)
}

/// Measure the size of a move against `p` without applying it.
pub fn measure_bound(
    p: &Presentation,
    mv: &TietzeMove,
    caps: &SearchCaps,
) -> Result<BoundReport, TietzeError> {
    let mut report = BoundReport {
        move_kind: mv.kind_name(),
        dl: None,
        work: None,
        area: None,
        gwork: None,
        length: None,
        caps: *caps,
        certified: true,
    };
    let max_in = |slot: &mut Option<u64>, r: SearchResult, certified: &mut bool| match r {
        SearchResult::Found { cost, .. } => *slot = Some(slot.map_or(cost, |old| old.max(cost))),
        _ => *certified = false,
    };
    match mv {
        TietzeMove::T1Add { relations } | TietzeMove::T2Remove { relations } => {
            let base = if let TietzeMove::T2Remove { .. } = mv {
                // T2 measures derivability from what remains
                let mut shrunk = p.clone();
                for text in relations {
                    let rel = parse_relation(&shrunk, text)?;
                    shrunk = without_relation(&shrunk, &rel)?;
                }
                shrunk
            } else {
                p.clone()
            };
            let mut models: Vec<(CostModel, fn(&mut BoundReport) -> &mut Option<u64>)> = vec![
                (CostModel::Steps, |r| &mut r.dl),
                (CostModel::Work, |r| &mut r.work),
            ];
            if base.kind == Kind::Group {
                models.push((CostModel::AreaSteps, |r| &mut r.area));
                models.push((CostModel::GworkSteps, |r| &mut r.gwork));
            }
            for text in relations {
                let rel = parse_relation(p, text)?;
                for (cm, slot) in &models {
                    let (u, v) = match &rel {
                        ParsedRelation::Pair(pair) => (pair.lhs.clone(), pair.rhs.clone()),
                        ParsedRelation::Relator(w) => (w.clone(), Word::empty(p.alphabet.clone())),
                    };
                    let res = min_cost_derivation(&u, &v, &base, *cm, caps)?;
                    let mut certified = report.certified;
                    max_in(slot(&mut report), res, &mut certified);
                    report.certified = certified;
                }
            }
        }
        TietzeMove::T3AddGenerators { definitions } => {
            let mut len = 0u64;
            for (_, def) in definitions {
                len = len.max(p.alphabet.parse_word(def)?.len() as u64);
            }
            report.length = Some(len);
        }
        TietzeMove::T4RemoveGenerators { names } => {
            let mut len = 0u64;
            for name in names {
                let y = p
                    .alphabet
                    .letter(name)
                    .ok_or_else(|| TietzeError::NoSuchGenerator(name.clone()))?;
                let (u, _) = defining_word(p, y)?;
                len = len.max(u.len() as u64);
            }
            report.length = Some(len);
        }
    }
    Ok(report)
}

/// Two one-sided pointwise comparisons forming a sandwich inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityReport {
    pub lower: CompareReport,
    pub upper: CompareReport,
}

impl InequalityReport {
    pub fn holds(&self) -> bool {
        self.lower.holds() && self.upper.holds()
    }
}

/// After adding (or before removing) relations of search cost at most `c`:
/// the transformed table is pointwise below the original, and the
/// original at most `c` times the transformed, under the given cost
/// model.
pub fn check_t1_inequality(
    p: &Presentation,
    transformed: &Presentation,
    c: u64,
    n1: usize,
    n2: usize,
    caps: &SearchCaps,
    cm: CostModel,
) -> Result<InequalityReport, TietzeError> {
    let t = cost_table(p, n1, n2, caps, cm)?;
    let t2 = cost_table(transformed, n1, n2, caps, cm)?;
    Ok(InequalityReport {
        lower: check_strong_preceq(&t2, &t, 1)?,
        upper: check_strong_preceq(&t, &t2, c.max(1))?,
    })
}

/// After adding generators with defining words of length at most `c`:
/// `f(m, n) <= f'(m, n) <= f(cm, cn) + addend(m, n)` where `f` is the
/// original table, `f'` the transformed one, and the addend is `m + n`
/// for derivation length and `(c + 1)(m + n)` for work.
pub fn check_t3_inequality(
    p: &Presentation,
    extended: &Presentation,
    c: u64,
    n1: usize,
    n2: usize,
    caps: &SearchCaps,
    cm: CostModel,
) -> Result<InequalityReport, TietzeError> {
    let c = c.max(1) as usize;
    let small = cost_table(p, n1, n2, caps, cm)?;
    let ext = cost_table(extended, n1, n2, caps, cm)?;
    let big = cost_table(p, c * n1, c * n2, caps, cm)?;
    let lower = check_strong_preceq(&small, &ext, 1)?;
    let mut upper = CompareReport { alpha: c as u64, checked: 0, skipped: 0, violations: Vec::new() };
    let addend_scale = match cm {
        CostModel::Work => c as u64 + 1,
        _ => 1,
    };
    for m in 0..=n1 {
        for n in 0..=n2 {
            match (ext.get(m, n), big.get(c * m, c * n)) {
                (Some(f), Some(g)) => {
                    upper.checked += 1;
                    let bound = g + addend_scale * (m + n) as u64;
                    if f > bound {
                        upper.violations.push((vec![m, n], f, bound));
                    }
                }
                _ => upper.skipped += 1,
            }
        }
    }
    Ok(InequalityReport { lower, upper })
}

/// A sampled violation of a shortest-representative comparison:
/// `(word, shortest in p, shortest in p')`.
pub type LengthViolation = (String, u64, u64);

/// Shortest-representative bridge after adding generators with defining
/// words of length at most `c`: for every element of the original monoid,
/// its shortest word in the extended presentation is at most its shortest
/// word in the original, which is at most `c` times the extended one.
/// Sampled over all words of length at most `n` in the original alphabet.
pub fn check_length_bridge(
    p: &Presentation,
    extended: &Presentation,
    c: u64,
    n: usize,
    caps: &SearchCaps,
) -> Result<Vec<LengthViolation>, TietzeError> {
    let sys = CompiledSystem::compile(p)?;
    let sys_ext = CompiledSystem::compile(extended)?;
    let mut violations = Vec::new();
    for w in crate::words::words_up_to(&p.alphabet, n) {
        let short = shortest_representative(&w, &sys, caps)?;
        let w_ext = transport(&w, &sys_ext.alphabet)?;
        let short_ext = shortest_representative(&w_ext, &sys_ext, caps)?;
        if let (Some(a), Some(b)) = (short, short_ext) {
            if !(b <= a && a <= c.max(1) * b) {
                violations.push((w.render(), a, b));
            }
        }
    }
    Ok(violations)
}

fn shortest_representative(
    w: &Word,
    sys: &CompiledSystem,
    caps: &SearchCaps,
) -> Result<Option<u64>, TietzeError> {
    let closure = cost_closure(w, sys, CostModel::Steps, caps, None)?;
    if closure.truncated {
        return Ok(None);
    }
    Ok(closure.iter().map(|(word, _)| word.len() as u64).min())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaDistReport {
    /// Extended-table conjugator lengths dominated by the original's
    /// (pairs using a new generator land at scaled coordinates, so the
    /// comparison carries the usual `c`-scaling and additive slack).
    pub gamma_lower: CompareReport,
    /// Original conjugator lengths dominated by the extended table's.
    pub gamma_upper: CompareReport,
    /// Distortion of the original is pointwise below the extended's.
    pub dist_lower: CompareReport,
    /// Extended distortion at `n` is at most the original's at `cn`.
    pub dist_upper: CompareReport,
}

impl GammaDistReport {
    pub fn holds(&self) -> bool {
        self.gamma_lower.holds()
            && self.gamma_upper.holds()
            && self.dist_lower.holds()
            && self.dist_upper.holds()
    }
}

/// Conjugator-length and distortion invariance under a generator move of
/// length bound `c`. `base` must be the presentation with fewer
/// generators and `ext` the one with more (which one was transformed into
/// which does not matter); `gens`/`gens_ext` are corresponding generating
/// sets of the distorted submonoid on each side.
#[allow(clippy::too_many_arguments)]
pub fn check_gamma_dist_invariance(
    base: &Presentation,
    ext: &Presentation,
    gens: &[Word],
    gens_ext: &[Word],
    c: u64,
    n: usize,
    caps: &SearchCaps,
    conj_base: &ConjMethod,
    conj_ext: &ConjMethod,
    wp_base: &WpMethod,
    wp_ext: &WpMethod,
) -> Result<GammaDistReport, TietzeError> {
    let c = c.max(1);
    // tables reach c*n so the scaled comparison covers all of 1..=n
    let g_base = gamma_table(base, c as usize * n, c as usize * n, caps, conj_base)?;
    let g_ext = gamma_table(ext, c as usize * n, c as usize * n, caps, conj_ext)?;
    let factor_bound = |m: u64| m + 2;
    let d_base = dist_table(base, gens, (c as usize) * n, caps, wp_base, &factor_bound)?;
    let d_ext = dist_table(ext, gens_ext, n, caps, wp_ext, &factor_bound)?;
    let gamma_lower = crate::invariants::check_preceq(&g_ext, &g_base, c)?;
    let gamma_upper = crate::invariants::check_preceq(&g_base, &g_ext, c)?;
    let mut dist_lower = CompareReport { alpha: 1, checked: 0, skipped: 0, violations: Vec::new() };
    let mut dist_upper = CompareReport { alpha: c, checked: 0, skipped: 0, violations: Vec::new() };
    for i in 0..=n {
        match (d_base.get(i), d_ext.get(i)) {
            (Some(a), Some(b)) => {
                dist_lower.checked += 1;
                if a > b {
                    dist_lower.violations.push((vec![i], a, b));
                }
            }
            _ => dist_lower.skipped += 1,
        }
        match (d_ext.get(i), d_base.get(c as usize * i)) {
            (Some(b), Some(a_big)) => {
                dist_upper.checked += 1;
                if b > a_big {
                    dist_upper.violations.push((vec![i], b, a_big));
                }
            }
            _ => dist_upper.skipped += 1,
        }
    }
    Ok(GammaDistReport { gamma_lower, gamma_upper, dist_lower, dist_upper })
}
