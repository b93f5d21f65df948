//! One-step rewriting, derivations, and exact minimum-cost derivation
//! search between words of a presented monoid.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::hash::{BuildHasher, Hasher};
use std::sync::Arc;

use thiserror::Error;

use crate::presentations::{Kind, Presentation, PresentationError, Rule, RuleOrigin, RuleSource};
use crate::words::{LetterId, Word, WordError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RewriteError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error("cost model {0:?} needs a group-derived rule system (free/relator tagged rules)")]
    InvalidCostModel(CostModel),
    #[error("step {index}: left side `{lhs}` does not occur at position {position}")]
    InvalidStep { index: usize, position: usize, lhs: String },
    #[error("words belong to different alphabets")]
    AlphabetMismatch,
    #[error("rule enumeration is not available for this rule source")]
    NotEnumerable,
    #[error("malformed derivation document: {0}")]
    BadDocument(String),
}

/// Exact integer cost models for a single rewriting step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CostModel {
    /// Every step costs 1 (derivation length).
    Steps,
    /// A step by rule `(a, b)` costs `|a| + |b|` (derivation work).
    Work,
    /// Free-cancellation steps cost 1, a step by `(a, b)` costs `1 + |b|`.
    Sdl,
    /// Free steps cost 0, relator-derived steps cost 1 (diagram area).
    AreaSteps,
    /// Free steps cost 0, relator-derived steps cost the relator length.
    GworkSteps,
}

impl CostModel {
    pub fn step_cost(self, lhs_len: usize, rhs_len: usize, origin: RuleOrigin) -> Result<u64, RewriteError> {
        match self {
            CostModel::Steps => Ok(1),
            CostModel::Work => Ok((lhs_len + rhs_len) as u64),
            CostModel::Sdl => match origin {
                RuleOrigin::Free => Ok(1),
                _ => Ok(1 + rhs_len as u64),
            },
            CostModel::AreaSteps => match origin {
                RuleOrigin::Free => Ok(0),
                RuleOrigin::Relator { .. } => Ok(1),
                RuleOrigin::Plain => Err(RewriteError::InvalidCostModel(self)),
            },
            CostModel::GworkSteps => match origin {
                RuleOrigin::Free => Ok(0),
                RuleOrigin::Relator { relator_len } => Ok(relator_len as u64),
                RuleOrigin::Plain => Err(RewriteError::InvalidCostModel(self)),
            },
        }
    }
}

/// Hard limits for a search. Exceeding `max_word_length` silently prunes
/// (the search answers relative to that length bound); exceeding
/// `max_cost` or `max_states` marks the result as cap-truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SearchCaps {
    pub max_word_length: usize,
    pub max_cost: u64,
    pub max_states: usize,
}

impl SearchCaps {
    pub fn new(max_word_length: usize, max_cost: u64, max_states: usize) -> SearchCaps {
        SearchCaps { max_word_length, max_cost, max_states }
    }

    /// The command line defaults: length `max(|u|, |v|) + 4`, cost `10^4`,
    /// states `10^6`.
    pub fn default_for(u: &Word, v: &Word) -> SearchCaps {
        SearchCaps {
            max_word_length: u.len().max(v.len()) + 4,
            max_cost: 10_000,
            max_states: 1_000_000,
        }
    }
}

/// One rewriting step: the rule's two sides and where it was applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationStep {
    pub position: usize,
    pub lhs: Word,
    pub rhs: Word,
    pub origin: RuleOrigin,
}

/// A finite derivation `u_0 -> u_1 -> ... -> u_k` recorded as its start
/// word plus the applied steps. Self-contained and replayable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub start: Word,
    pub steps: Vec<DerivationStep>,
}

impl Derivation {
    pub fn trivial(start: Word) -> Derivation {
        Derivation { start, steps: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// All intermediate words including start and end, validating every
    /// step on the way.
    pub fn replay(&self) -> Result<Vec<Word>, RewriteError> {
        let mut words = vec![self.start.clone()];
        for (i, s) in self.steps.iter().enumerate() {
            let cur = words.last().unwrap();
            let ok = s.position + s.lhs.len() <= cur.len()
                && &cur.letters()[s.position..s.position + s.lhs.len()] == s.lhs.letters();
            if !ok {
                return Err(RewriteError::InvalidStep {
                    index: i,
                    position: s.position,
                    lhs: s.lhs.render(),
                });
            }
            words.push(cur.splice(s.position, s.lhs.len(), s.rhs.letters()));
        }
        Ok(words)
    }

    pub fn end(&self) -> Result<Word, RewriteError> {
        Ok(self.replay()?.pop().unwrap())
    }

    pub fn cost(&self, cm: CostModel) -> Result<u64, RewriteError> {
        let mut total = 0u64;
        for s in &self.steps {
            total += cm.step_cost(s.lhs.len(), s.rhs.len(), s.origin)?;
        }
        Ok(total)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let steps: Vec<serde_json::Value> = self
            .steps
            .iter()
            .map(|s| {
                let origin = match s.origin {
                    RuleOrigin::Plain => serde_json::json!("plain"),
                    RuleOrigin::Free => serde_json::json!("free"),
                    RuleOrigin::Relator { relator_len } => {
                        serde_json::json!({ "relator_len": relator_len })
                    }
                };
                serde_json::json!({
                    "position": s.position,
                    "lhs": s.lhs.render(),
                    "rhs": s.rhs.render(),
                    "origin": origin,
                })
            })
            .collect();
        let mut costs = serde_json::Map::new();
        for (name, cm) in
            [("steps", CostModel::Steps), ("work", CostModel::Work), ("sdl", CostModel::Sdl)]
        {
            costs.insert(name.into(), serde_json::json!(self.cost(cm).unwrap()));
        }
        for (name, cm) in [("area_steps", CostModel::AreaSteps), ("gwork_steps", CostModel::GworkSteps)] {
            if let Ok(c) = self.cost(cm) {
                costs.insert(name.into(), serde_json::json!(c));
            }
        }
        serde_json::json!({
            "start": self.start.render(),
            "end": self.end().map(|w| w.render()).unwrap_or_default(),
            "steps": steps,
            "costs": costs,
        })
    }

    pub fn from_json(
        v: &serde_json::Value,
        alphabet: &Arc<crate::words::Alphabet>,
    ) -> Result<Derivation, RewriteError> {
        let bad = |m: &str| RewriteError::BadDocument(m.into());
        let start = v.get("start").and_then(|s| s.as_str()).ok_or_else(|| bad("missing start"))?;
        let start = alphabet.parse_word(start)?;
        let mut steps = Vec::new();
        for s in v.get("steps").and_then(|s| s.as_array()).ok_or_else(|| bad("missing steps"))? {
            let position = s
                .get("position")
                .and_then(|p| p.as_u64())
                .ok_or_else(|| bad("step missing position"))? as usize;
            let lhs = s.get("lhs").and_then(|x| x.as_str()).ok_or_else(|| bad("step lhs"))?;
            let rhs = s.get("rhs").and_then(|x| x.as_str()).ok_or_else(|| bad("step rhs"))?;
            let origin = match s.get("origin") {
                Some(serde_json::Value::String(o)) if o == "free" => RuleOrigin::Free,
                Some(serde_json::Value::Object(o)) => RuleOrigin::Relator {
                    relator_len: o
                        .get("relator_len")
                        .and_then(|l| l.as_u64())
                        .ok_or_else(|| bad("origin relator_len"))?
                        as usize,
                },
                _ => RuleOrigin::Plain,
            };
            steps.push(DerivationStep {
                position,
                lhs: alphabet.parse_word(lhs)?,
                rhs: alphabet.parse_word(rhs)?,
                origin,
            });
        }
        let d = Derivation { start, steps };
        d.replay()?;
        Ok(d)
    }
}

#[derive(Debug, Clone)]
pub struct CompiledRule {
    pub lhs: Vec<LetterId>,
    pub rhs: Vec<LetterId>,
    pub origin: RuleOrigin,
}

/// A symmetrized, flattened rule list ready for searching. `partial` is set
/// when an oracle source was cut off by its budget.
#[derive(Debug, Clone)]
pub struct CompiledSystem {
    pub alphabet: Arc<crate::words::Alphabet>,
    pub rules: Vec<CompiledRule>,
    pub partial: bool,
}

impl CompiledSystem {
    /// Flatten a presentation into a symmetric rule list. Group
    /// presentations pass through their corresponding monoid presentation.
    pub fn compile(p: &Presentation) -> Result<CompiledSystem, RewriteError> {
        let p = match p.kind {
            Kind::Group => p.group_to_monoid()?,
            Kind::Monoid => p.clone(),
        };
        let (listed, partial): (Vec<Rule>, bool) = match &p.rules {
            RuleSource::Finite(rules) => (rules.clone(), false),
            RuleSource::Relators(_) => unreachable!("group kind handled above"),
            RuleSource::Decidable(o) => enumerate_budgeted(&o.enumerate, p.oracle_budget),
            RuleSource::Enumerable(o) => enumerate_budgeted(&o.enumerate, p.oracle_budget),
        };
        let mut rules: Vec<CompiledRule> = Vec::new();
        let mut push = |r: CompiledRule| {
            if r.lhs != r.rhs && !rules.iter().any(|o| o.lhs == r.lhs && o.rhs == r.rhs) {
                rules.push(r);
            }
        };
        for r in &listed {
            push(CompiledRule {
                lhs: r.pair.lhs.letters().to_vec(),
                rhs: r.pair.rhs.letters().to_vec(),
                origin: r.origin,
            });
        }
        for r in &listed {
            push(CompiledRule {
                lhs: r.pair.rhs.letters().to_vec(),
                rhs: r.pair.lhs.letters().to_vec(),
                origin: r.origin,
            });
        }
        Ok(CompiledSystem { alphabet: p.alphabet.clone(), rules, partial })
    }

    /// All one-step successors of `w`, ordered by (position, rule index).
    pub fn successors(&self, w: &[LetterId]) -> Vec<(usize, usize, Vec<LetterId>)> {
        let mut out = Vec::new();
        for pos in 0..=w.len() {
            for (ri, rule) in self.rules.iter().enumerate() {
                let l = rule.lhs.len();
                if pos + l > w.len() {
                    continue;
                }
                if l == 0 && pos < w.len() {
                    // empty left side applies at every gap; handled when
                    // pos runs to w.len() too, so nothing special here
                }
                if w[pos..pos + l] == rule.lhs[..] {
                    let mut nw = Vec::with_capacity(w.len() - l + rule.rhs.len());
                    nw.extend_from_slice(&w[..pos]);
                    nw.extend_from_slice(&rule.rhs);
                    nw.extend_from_slice(&w[pos + l..]);
                    out.push((pos, ri, nw));
                }
            }
        }
        out
    }

    fn step_from(&self, pos: usize, ri: usize) -> DerivationStep {
        let r = &self.rules[ri];
        DerivationStep {
            position: pos,
            lhs: Word::from_letters(self.alphabet.clone(), r.lhs.clone()),
            rhs: Word::from_letters(self.alphabet.clone(), r.rhs.clone()),
            origin: r.origin,
        }
    }
}

fn enumerate_budgeted(e: &crate::presentations::Enumerator, budget: u64) -> (Vec<Rule>, bool) {
    let mut out = Vec::new();
    for n in 0..budget {
        match e(n) {
            Some(pair) => out.push(Rule { pair, origin: RuleOrigin::Plain }),
            None => return (out, false),
        }
    }
    (out, true)
}

/// Result of a bounded search.
#[derive(Debug, Clone)]
pub enum SearchResult {
    Found { cost: u64, derivation: Derivation },
    /// The cost or state cap truncated the frontier; absence of a
    /// derivation is not certified.
    NotWithinCaps,
    /// The reachable set within the word-length cap was exhausted and the
    /// target is not in it.
    NoDerivationWithinLengthCap,
}

impl SearchResult {
    pub fn found_cost(&self) -> Option<u64> {
        match self {
            SearchResult::Found { cost, .. } => Some(*cost),
            _ => None,
        }
    }
}

// A small FNV-based hasher; word keys are short and this keeps closure
// hashing cheap and dependency-free.
#[derive(Default, Clone)]
pub struct FnvBuild;

pub struct FnvHasher(u64);

impl Hasher for FnvHasher {
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 ^= b as u64;
            self.0 = self.0.wrapping_mul(0x100000001b3);
        }
    }
    fn finish(&self) -> u64 {
        self.0
    }
}

impl BuildHasher for FnvBuild {
    type Hasher = FnvHasher;
    fn build_hasher(&self) -> FnvHasher {
        FnvHasher(0xcbf29ce484222325)
    }
}

struct Node {
    word: Box<[LetterId]>,
    cost: u64,
    parent: Option<(u32, u32, u32)>, // (node, position, rule)
}

/// The cost-ordered reachability closure of a start word.
pub struct Closure {
    nodes: Vec<Node>,
    index: HashMap<Box<[LetterId]>, u32, FnvBuild>,
    pub truncated: bool,
}

impl Closure {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn cost_of(&self, w: &[LetterId]) -> Option<u64> {
        self.index.get(w).map(|&i| self.nodes[i as usize].cost)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[LetterId], u64)> {
        self.nodes.iter().map(|n| (&n.word[..], n.cost))
    }

    fn rebuild(&self, sys: &CompiledSystem, start: &Word, idx: u32) -> Derivation {
        let mut chain = Vec::new();
        let mut cur = idx;
        while let Some((p, pos, rule)) = self.nodes[cur as usize].parent {
            chain.push((pos as usize, rule as usize));
            cur = p;
        }
        chain.reverse();
        Derivation {
            start: start.clone(),
            steps: chain.into_iter().map(|(pos, ri)| sys.step_from(pos, ri)).collect(),
        }
    }

    pub fn derivation_to(
        &self,
        sys: &CompiledSystem,
        start: &Word,
        w: &[LetterId],
    ) -> Option<Derivation> {
        self.index.get(w).map(|&i| self.rebuild(sys, start, i))
    }
}

/// Dijkstra over the one-step rewriting graph from `start`. Ties are
/// broken deterministically: nodes settle in insertion order among equal
/// costs and successors are generated in (position, rule index) order, so
/// reconstructed derivations are reproducible across runs and thread
/// counts. If `target` is given the search stops as soon as it settles.
pub fn cost_closure(
    start: &Word,
    sys: &CompiledSystem,
    cm: CostModel,
    caps: &SearchCaps,
    target: Option<&[LetterId]>,
) -> Result<Closure, RewriteError> {
    // precompute per-rule costs (also validates the cost model)
    let mut rule_cost = Vec::with_capacity(sys.rules.len());
    for r in &sys.rules {
        rule_cost.push(cm.step_cost(r.lhs.len(), r.rhs.len(), r.origin)?);
    }

    let mut closure = Closure {
        nodes: Vec::new(),
        index: HashMap::with_hasher(FnvBuild),
        truncated: sys.partial,
    };
    if start.len() > caps.max_word_length {
        return Ok(closure);
    }
    let key: Box<[LetterId]> = start.letters().into();
    closure.nodes.push(Node { word: key.clone(), cost: 0, parent: None });
    closure.index.insert(key, 0);

    let mut heap: BinaryHeap<Reverse<(u64, u32)>> = BinaryHeap::new();
    heap.push(Reverse((0, 0)));
    let mut settled = vec![false];

    while let Some(Reverse((cost, idx))) = heap.pop() {
        if settled[idx as usize] || cost > closure.nodes[idx as usize].cost {
            continue;
        }
        settled[idx as usize] = true;
        if target == Some(&closure.nodes[idx as usize].word[..]) {
            return Ok(closure);
        }
        let word = closure.nodes[idx as usize].word.clone();
        for (pos, ri, nw) in sys.successors(&word) {
            if nw.len() > caps.max_word_length {
                continue;
            }
            let ncost = cost.saturating_add(rule_cost[ri]);
            let existing = closure.index.get(&nw[..]).copied();
            match existing {
                Some(j) => {
                    if ncost < closure.nodes[j as usize].cost {
                        closure.nodes[j as usize].cost = ncost;
                        closure.nodes[j as usize].parent =
                            Some((idx, pos as u32, ri as u32));
                        heap.push(Reverse((ncost, j)));
                    }
                }
                None => {
                    if ncost > caps.max_cost {
                        closure.truncated = true;
                        continue;
                    }
                    if closure.nodes.len() >= caps.max_states {
                        closure.truncated = true;
                        continue;
                    }
                    let j = closure.nodes.len() as u32;
                    let key: Box<[LetterId]> = nw.into();
                    closure.nodes.push(Node {
                        word: key.clone(),
                        cost: ncost,
                        parent: Some((idx, pos as u32, ri as u32)),
                    });
                    closure.index.insert(key, j);
                    settled.push(false);
                    heap.push(Reverse((ncost, j)));
                }
            }
        }
    }
    Ok(closure)
}

/// Minimum-cost derivation from `u` to `v` under the given cost model,
/// searched over the symmetrized rule system of `p`.
pub fn min_cost_derivation(
    u: &Word,
    v: &Word,
    p: &Presentation,
    cm: CostModel,
    caps: &SearchCaps,
) -> Result<SearchResult, RewriteError> {
    if !u.same_alphabet(v) && p.kind == Kind::Monoid {
        return Err(RewriteError::AlphabetMismatch);
    }
    let sys = CompiledSystem::compile(p)?;
    search_in(&sys, u, v, cm, caps)
}

pub fn search_in(
    sys: &CompiledSystem,
    u: &Word,
    v: &Word,
    cm: CostModel,
    caps: &SearchCaps,
) -> Result<SearchResult, RewriteError> {
    if v.len() > caps.max_word_length || u.len() > caps.max_word_length {
        return Ok(SearchResult::NoDerivationWithinLengthCap);
    }
    let closure = cost_closure(u, sys, cm, caps, Some(v.letters()))?;
    match closure.cost_of(v.letters()) {
        Some(cost) => {
            let derivation = closure.derivation_to(sys, u, v.letters()).unwrap();
            Ok(SearchResult::Found { cost, derivation })
        }
        None if closure.truncated => Ok(SearchResult::NotWithinCaps),
        None => Ok(SearchResult::NoDerivationWithinLengthCap),
    }
}

/// All derivations from `u` of length at most `k` (including the trivial
/// one), in depth-first (position, rule index) order.
pub fn derivations_with_steps(
    u: &Word,
    p: &Presentation,
    k: usize,
) -> Result<Vec<Derivation>, RewriteError> {
    let sys = CompiledSystem::compile(p)?;
    let mut out = Vec::new();
    let mut steps: Vec<(usize, usize)> = Vec::new();
    dfs_steps(&sys, u.letters().to_vec(), k, &mut steps, &mut out, u);
    Ok(out)
}

fn dfs_steps(
    sys: &CompiledSystem,
    w: Vec<LetterId>,
    remaining: usize,
    steps: &mut Vec<(usize, usize)>,
    out: &mut Vec<Derivation>,
    start: &Word,
) {
    out.push(Derivation {
        start: start.clone(),
        steps: steps.iter().map(|&(p, r)| sys.step_from(p, r)).collect(),
    });
    if remaining == 0 {
        return;
    }
    for (pos, ri, nw) in sys.successors(&w) {
        steps.push((pos, ri));
        dfs_steps(sys, nw, remaining - 1, steps, out, start);
        steps.pop();
    }
}

/// All derivations from `u` of total work at most `k`. For decidable
/// oracle sources candidate rules are enumerated as (subword, word over X)
/// pairs within the work budget and checked with the membership predicate;
/// this makes the enumeration exact but exponential in `k`.
pub fn derivations_with_work(
    u: &Word,
    p: &Presentation,
    k: u64,
) -> Result<Vec<Derivation>, RewriteError> {
    match (&p.kind, &p.rules) {
        (Kind::Monoid, RuleSource::Decidable(o)) => {
            let mut out = Vec::new();
            let mut steps: Vec<DerivationStep> = Vec::new();
            dfs_work_decidable(p, &o.decide, u.letters().to_vec(), k, &mut steps, &mut out, u);
            Ok(out)
        }
        (Kind::Monoid, RuleSource::Enumerable(_)) => Err(RewriteError::NotEnumerable),
        _ => {
            let sys = CompiledSystem::compile(p)?;
            let mut out = Vec::new();
            let mut steps: Vec<(usize, usize)> = Vec::new();
            dfs_work(&sys, u.letters().to_vec(), k, &mut steps, &mut out, u)?;
            Ok(out)
        }
    }
}

fn dfs_work(
    sys: &CompiledSystem,
    w: Vec<LetterId>,
    remaining: u64,
    steps: &mut Vec<(usize, usize)>,
    out: &mut Vec<Derivation>,
    start: &Word,
) -> Result<(), RewriteError> {
    out.push(Derivation {
        start: start.clone(),
        steps: steps.iter().map(|&(p, r)| sys.step_from(p, r)).collect(),
    });
    for (pos, ri, nw) in sys.successors(&w) {
        let r = &sys.rules[ri];
        let work = (r.lhs.len() + r.rhs.len()) as u64;
        if work > remaining {
            continue;
        }
        steps.push((pos, ri));
        dfs_work(sys, nw, remaining - work, steps, out, start)?;
        steps.pop();
    }
    Ok(())
}

fn dfs_work_decidable(
    p: &Presentation,
    decide: &crate::presentations::Decider,
    w: Vec<LetterId>,
    remaining: u64,
    steps: &mut Vec<DerivationStep>,
    out: &mut Vec<Derivation>,
    start: &Word,
) {
    out.push(Derivation { start: start.clone(), steps: steps.clone() });
    let alpha = &p.alphabet;
    for pos in 0..=w.len() {
        for l in 0..=(w.len() - pos).min(remaining as usize) {
            let lhs = Word::from_letters(alpha.clone(), w[pos..pos + l].to_vec());
            let max_rhs = remaining as usize - l;
            for rhs in crate::words::words_up_to(alpha, max_rhs) {
                let pair = crate::words::RelationPair::new(lhs.clone(), rhs.clone()).unwrap();
                let symmetric = (decide)(&pair) || (decide)(&pair.reversed());
                if !symmetric || pair.lhs == pair.rhs {
                    continue;
                }
                let work = pair.len() as u64;
                let mut nw = w[..pos].to_vec();
                nw.extend_from_slice(rhs.letters());
                nw.extend_from_slice(&w[pos + l..]);
                steps.push(DerivationStep {
                    position: pos,
                    lhs: lhs.clone(),
                    rhs,
                    origin: RuleOrigin::Plain,
                });
                dfs_work_decidable(p, decide, nw, remaining - work, steps, out, start);
                steps.pop();
            }
        }
    }
}

/// Minimum number of relator applications in a derivation of `w` from the
/// empty word: the combinatorial area of the relator `w`.
pub fn area(w: &Word, p: &Presentation, caps: &SearchCaps) -> Result<SearchResult, RewriteError> {
    group_cost_search(w, p, caps, CostModel::AreaSteps)
}

/// Like [`area`] but weighting each relator application by the relator
/// length.
pub fn gwork(w: &Word, p: &Presentation, caps: &SearchCaps) -> Result<SearchResult, RewriteError> {
    group_cost_search(w, p, caps, CostModel::GworkSteps)
}

fn group_cost_search(
    w: &Word,
    p: &Presentation,
    caps: &SearchCaps,
    cm: CostModel,
) -> Result<SearchResult, RewriteError> {
    let sys = CompiledSystem::compile(p)?;
    let one = Word::empty(p.alphabet.clone());
    search_in(&sys, &one, w, cm, caps)
}
