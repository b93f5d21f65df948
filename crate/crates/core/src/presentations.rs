//! Monoid and group presentations, finitely given or oracle-given.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::words::{Alphabet, RelationPair, Word, WordError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("operation requires a {0} presentation")]
    WrongKind(&'static str),
    #[error("operation requires a finitely listed rule set")]
    NotFinite,
    #[error("operation requires an enumerable-oracle presentation")]
    NotEnumerable,
    #[error("group presentations need an alphabet with involution")]
    NoInvolution,
    #[error("relator `{0}` is not freely reduced")]
    RelatorNotReduced(String),
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("oracle presentations cannot be serialized")]
    NotSerializable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Monoid,
    Group,
}

/// Where a monoid rule came from. Cost models for group-derived systems
/// treat free-cancellation rules and relator-derived rules differently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleOrigin {
    /// An ordinary defining relation of a monoid presentation.
    Plain,
    /// A free-cancellation rule `x x^-1 = 1` (either orientation).
    Free,
    /// Derived from a relator of the given total length.
    Relator { relator_len: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub pair: RelationPair,
    pub origin: RuleOrigin,
}

impl Rule {
    pub fn plain(lhs: Word, rhs: Word) -> Result<Rule, WordError> {
        Ok(Rule { pair: RelationPair::new(lhs, rhs)?, origin: RuleOrigin::Plain })
    }

    pub fn reversed(&self) -> Rule {
        Rule { pair: self.pair.reversed(), origin: self.origin }
    }
}

pub type Enumerator = Arc<dyn Fn(u64) -> Option<RelationPair> + Send + Sync>;
pub type Decider = Arc<dyn Fn(&RelationPair) -> bool + Send + Sync>;

/// A decidable rule set: a total membership predicate plus an enumerator of
/// the same set. Both are consulted under an explicit per-call budget.
#[derive(Clone)]
pub struct DecidableOracle {
    pub decide: Decider,
    pub enumerate: Enumerator,
}

/// A recursively enumerable rule set given only by an enumerator.
#[derive(Clone)]
pub struct EnumerableOracle {
    pub enumerate: Enumerator,
}

#[derive(Clone)]
pub enum RuleSource {
    /// Finitely many listed relations (monoid kind).
    Finite(Vec<Rule>),
    /// Finitely many relators, each freely reduced (group kind).
    Relators(Vec<Word>),
    Decidable(DecidableOracle),
    Enumerable(EnumerableOracle),
}

impl fmt::Debug for RuleSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleSource::Finite(rules) => f.debug_tuple("Finite").field(&rules.len()).finish(),
            RuleSource::Relators(rs) => f.debug_tuple("Relators").field(&rs.len()).finish(),
            RuleSource::Decidable(_) => f.write_str("Decidable(..)"),
            RuleSource::Enumerable(_) => f.write_str("Enumerable(..)"),
        }
    }
}

pub const DEFAULT_ORACLE_BUDGET: u64 = 10_000;

#[derive(Debug, Clone)]
pub struct Presentation {
    pub kind: Kind,
    pub alphabet: Arc<Alphabet>,
    pub rules: RuleSource,
    /// How many enumerator outputs / membership queries an operation may
    /// spend on an oracle rule source before flagging partiality.
    pub oracle_budget: u64,
}

impl Presentation {
    pub fn monoid(
        alphabet: Arc<Alphabet>,
        rules: Vec<Rule>,
    ) -> Result<Presentation, PresentationError> {
        for r in &rules {
            if !r.pair.lhs.same_alphabet(&Word::empty(alphabet.clone())) {
                return Err(WordError::AlphabetMismatch.into());
            }
        }
        Ok(Presentation {
            kind: Kind::Monoid,
            alphabet,
            rules: RuleSource::Finite(dedup_rules(rules)),
            oracle_budget: DEFAULT_ORACLE_BUDGET,
        })
    }

    pub fn group(
        alphabet: Arc<Alphabet>,
        relators: Vec<Word>,
    ) -> Result<Presentation, PresentationError> {
        if !alphabet.has_involution() {
            return Err(PresentationError::NoInvolution);
        }
        let mut out = Vec::new();
        for r in relators {
            if !r.is_reduced()? {
                return Err(PresentationError::RelatorNotReduced(r.render()));
            }
            if !r.is_empty() && !out.contains(&r) {
                out.push(r);
            }
        }
        Ok(Presentation {
            kind: Kind::Group,
            alphabet,
            rules: RuleSource::Relators(out),
            oracle_budget: DEFAULT_ORACLE_BUDGET,
        })
    }

    pub fn finite_rules(&self) -> Result<&[Rule], PresentationError> {
        match &self.rules {
            RuleSource::Finite(r) => Ok(r),
            _ => Err(PresentationError::NotFinite),
        }
    }

    pub fn relators(&self) -> Result<&[Word], PresentationError> {
        match &self.rules {
            RuleSource::Relators(r) => Ok(r),
            _ => Err(PresentationError::WrongKind("group")),
        }
    }

    /// Close a finitely listed monoid rule set under reversal, keeping the
    /// original rules first and dropping duplicates.
    pub fn symmetrize(&self) -> Result<Presentation, PresentationError> {
        let rules = self.finite_rules()?;
        let mut out: Vec<Rule> = rules.to_vec();
        for r in rules {
            out.push(r.reversed());
        }
        Ok(Presentation {
            kind: Kind::Monoid,
            alphabet: self.alphabet.clone(),
            rules: RuleSource::Finite(dedup_rules(out)),
            oracle_budget: self.oracle_budget,
        })
    }

    /// The monoid presentation corresponding to a group presentation: for
    /// every relator `w` and every split `w = uv` the rule `(u, v^-1)`,
    /// plus the free-cancellation rules `(x x^-1, 1)` for every letter.
    pub fn group_to_monoid(&self) -> Result<Presentation, PresentationError> {
        let relators = self.relators()?;
        let alpha = self.alphabet.clone();
        let mut rules = Vec::new();
        for w in relators {
            for cut in 0..=w.len() {
                let u = w.subword(0, cut);
                let v = w.subword(cut, w.len() - cut);
                let pair = RelationPair::new(u, v.inverse()?)?;
                rules.push(Rule { pair, origin: RuleOrigin::Relator { relator_len: w.len() } });
            }
        }
        for l in 0..alpha.len() as u16 {
            let inv = alpha.inverse_of(l).unwrap();
            let lhs = Word::from_letters(alpha.clone(), vec![l, inv]);
            let pair = RelationPair::new(lhs, Word::empty(alpha.clone()))?;
            rules.push(Rule { pair, origin: RuleOrigin::Free });
        }
        Ok(Presentation {
            kind: Kind::Monoid,
            alphabet: alpha,
            rules: RuleSource::Finite(dedup_rules(rules)),
            oracle_budget: self.oracle_budget,
        })
    }

    /// Present the same object as a monoid with an explicit identity: the
    /// empty word already is the identity, so this is the identity map on
    /// monoid presentations; on group presentations it first passes through
    /// [`Presentation::group_to_monoid`].
    pub fn adjoin_identity(&self) -> Result<Presentation, PresentationError> {
        match self.kind {
            Kind::Monoid => Ok(self.clone()),
            Kind::Group => self.group_to_monoid(),
        }
    }

    /// Turn an enumerable-oracle presentation over `X` into a decidable one
    /// over `X u {e}`: rule `n` of the enumeration is re-addressed as
    /// `(e^n a_n, b_n)`, and the letter `e` is made a left/right identity.
    /// Membership of `(u, v)` is then decided by stripping the `e`-prefix
    /// of `u` and replaying the enumerator once at that index.
    pub fn pad_enumerable(&self, padding: &str) -> Result<Presentation, PresentationError> {
        if self.kind != Kind::Monoid {
            return Err(PresentationError::WrongKind("monoid"));
        }
        let base_enum = match &self.rules {
            RuleSource::Enumerable(o) => o.enumerate.clone(),
            _ => return Err(PresentationError::NotEnumerable),
        };
        let mut names: Vec<String> = self.alphabet.names().to_vec();
        names.push(padding.to_string());
        let alpha = Alphabet::monoid(&names)?;
        let e: u16 = (alpha.len() - 1) as u16;
        let base_letters = e;

        // identity rules: (e x, x) for x in X u {e}, (x e, x) for x in X
        let mut fixed: Vec<RelationPair> = Vec::new();
        for x in 0..=base_letters {
            let lhs = Word::from_letters(alpha.clone(), vec![e, x]);
            let rhs = Word::from_letters(alpha.clone(), vec![x]);
            fixed.push(RelationPair::new(lhs, rhs).unwrap());
        }
        for x in 0..base_letters {
            let lhs = Word::from_letters(alpha.clone(), vec![x, e]);
            let rhs = Word::from_letters(alpha.clone(), vec![x]);
            fixed.push(RelationPair::new(lhs, rhs).unwrap());
        }

        let lift = {
            let alpha = alpha.clone();
            move |p: &RelationPair| -> RelationPair {
                let l = Word::from_letters(alpha.clone(), p.lhs.letters().to_vec());
                let r = Word::from_letters(alpha.clone(), p.rhs.letters().to_vec());
                RelationPair::new(l, r).unwrap()
            }
        };

        let pad = {
            let alpha = alpha.clone();
            let lift = lift.clone();
            let base_enum = base_enum.clone();
            move |n: u64| -> Option<RelationPair> {
                let p = lift(&base_enum(n)?);
                let mut letters = vec![e; n as usize];
                letters.extend_from_slice(p.lhs.letters());
                Some(
                    RelationPair::new(Word::from_letters(alpha.clone(), letters), p.rhs).unwrap(),
                )
            }
        };

        let enumerate: Enumerator = {
            let fixed = fixed.clone();
            let pad = pad.clone();
            Arc::new(move |n: u64| {
                let k = fixed.len() as u64;
                if n < k {
                    Some(fixed[n as usize].clone())
                } else {
                    pad(n - k)
                }
            })
        };

        let decide: Decider = {
            let fixed = fixed.clone();
            Arc::new(move |q: &RelationPair| {
                if fixed.contains(q) {
                    return true;
                }
                // strip the e-prefix of the left side
                let lhs = q.lhs.letters();
                let n = lhs.iter().take_while(|&&l| l == e).count();
                if lhs[n..].contains(&e) || q.rhs.letters().contains(&e) {
                    return false;
                }
                match pad(n as u64) {
                    Some(expected) => expected == *q,
                    None => false,
                }
            })
        };

        Ok(Presentation {
            kind: Kind::Monoid,
            alphabet: alpha,
            rules: RuleSource::Decidable(DecidableOracle { decide, enumerate }),
            oracle_budget: self.oracle_budget,
        })
    }

    /// Stable content hash of a finitely given presentation, used to tag
    /// derived tables.
    pub fn content_hash(&self) -> String {
        let text = self.to_text().unwrap_or_else(|_| format!("{:?}", self));
        format!("{:016x}", fnv1a(text.as_bytes()))
    }

    /// Render in the line-based file format. Oracle sources are not
    /// serializable.
    pub fn to_text(&self) -> Result<String, PresentationError> {
        let mut out = String::new();
        match self.kind {
            Kind::Monoid => {
                out.push_str("kind = monoid\n");
                out.push_str(&format!("letters = {}\n", self.alphabet.names().join(" ")));
                for r in self.finite_rules().map_err(|_| PresentationError::NotSerializable)? {
                    out.push_str(&format!("rule {}\n", r.pair.render()));
                }
            }
            Kind::Group => {
                let gens: Vec<&str> = self
                    .alphabet
                    .positive_letters()
                    .iter()
                    .map(|&l| self.alphabet.name(l))
                    .collect();
                out.push_str("kind = group\n");
                out.push_str(&format!("letters = {}\n", gens.join(" ")));
                for r in self.relators()? {
                    out.push_str(&format!("rel {}\n", r.render()));
                }
            }
        }
        Ok(out)
    }

    /// Parse the line-based file format. A `builtin: NAME` first line is
    /// also accepted.
    pub fn from_text(text: &str) -> Result<Presentation, PresentationError> {
        let mut kind: Option<Kind> = None;
        let mut alphabet: Option<Arc<Alphabet>> = None;
        let mut rules: Vec<(usize, String)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = i + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(name) = line.strip_prefix("builtin:") {
                return builtin(name.trim());
            }
            if let Some(v) = line.strip_prefix("kind") {
                let v = eat_eq(v, lineno)?;
                kind = Some(match v {
                    "monoid" => Kind::Monoid,
                    "group" => Kind::Group,
                    other => {
                        return Err(PresentationError::Parse {
                            line: lineno,
                            msg: format!("unknown kind `{other}`"),
                        })
                    }
                });
            } else if let Some(v) = line.strip_prefix("letters") {
                let v = eat_eq(v, lineno)?;
                let names: Vec<&str> = v.split_whitespace().collect();
                let kind = kind.ok_or(PresentationError::Parse {
                    line: lineno,
                    msg: "`kind =` must come before `letters =`".into(),
                })?;
                alphabet = Some(match kind {
                    Kind::Monoid => Alphabet::monoid(&names)?,
                    Kind::Group => Alphabet::group(&names)?,
                });
            } else if line.starts_with("rule ") || line.starts_with("rel ") {
                rules.push((lineno, line.to_string()));
            } else {
                return Err(PresentationError::Parse {
                    line: lineno,
                    msg: format!("unrecognized line `{line}`"),
                });
            }
        }
        let kind = kind.ok_or(PresentationError::Parse { line: 0, msg: "missing `kind =`".into() })?;
        let alphabet = alphabet
            .ok_or(PresentationError::Parse { line: 0, msg: "missing `letters =`".into() })?;
        match kind {
            Kind::Monoid => {
                let mut out = Vec::new();
                for (lineno, line) in rules {
                    let body = line.strip_prefix("rule ").ok_or(PresentationError::Parse {
                        line: lineno,
                        msg: "`rel` lines are only valid in group presentations".into(),
                    })?;
                    let (l, r) = body.split_once('=').ok_or(PresentationError::Parse {
                        line: lineno,
                        msg: "rule must have the form `rule U = V`".into(),
                    })?;
                    let lhs = alphabet.parse_word(l).map_err(|e| PresentationError::Parse {
                        line: lineno,
                        msg: e.to_string(),
                    })?;
                    let rhs = alphabet.parse_word(r).map_err(|e| PresentationError::Parse {
                        line: lineno,
                        msg: e.to_string(),
                    })?;
                    out.push(Rule::plain(lhs, rhs)?);
                }
                Presentation::monoid(alphabet, out)
            }
            Kind::Group => {
                let mut out = Vec::new();
                for (lineno, line) in rules {
                    let body = line.strip_prefix("rel ").ok_or(PresentationError::Parse {
                        line: lineno,
                        msg: "`rule` lines are only valid in monoid presentations".into(),
                    })?;
                    let w = alphabet.parse_word(body).map_err(|e| PresentationError::Parse {
                        line: lineno,
                        msg: e.to_string(),
                    })?;
                    out.push(w);
                }
                Presentation::group(alphabet, out)
            }
        }
    }

    pub fn to_json(&self) -> Result<serde_json::Value, PresentationError> {
        let mut doc = serde_json::json!({
            "kind": match self.kind { Kind::Monoid => "monoid", Kind::Group => "group" },
        });
        match self.kind {
            Kind::Monoid => {
                doc["letters"] = serde_json::json!(self.alphabet.names());
                let rules = self.finite_rules().map_err(|_| PresentationError::NotSerializable)?;
                doc["rules"] = serde_json::Value::Array(
                    rules
                        .iter()
                        .map(|r| {
                            serde_json::json!({
                                "lhs": r.pair.lhs.render(),
                                "rhs": r.pair.rhs.render(),
                            })
                        })
                        .collect(),
                );
            }
            Kind::Group => {
                let gens: Vec<&str> = self
                    .alphabet
                    .positive_letters()
                    .iter()
                    .map(|&l| self.alphabet.name(l))
                    .collect();
                doc["letters"] = serde_json::json!(gens);
                doc["relators"] = serde_json::json!(self
                    .relators()?
                    .iter()
                    .map(|w| w.render())
                    .collect::<Vec<_>>());
            }
        }
        Ok(doc)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Presentation, PresentationError> {
        let bad = |msg: &str| PresentationError::Parse { line: 0, msg: msg.into() };
        let kind = v.get("kind").and_then(|k| k.as_str()).ok_or_else(|| bad("missing kind"))?;
        let letters: Vec<String> = v
            .get("letters")
            .and_then(|l| l.as_array())
            .ok_or_else(|| bad("missing letters"))?
            .iter()
            .map(|s| s.as_str().map(str::to_string).ok_or_else(|| bad("letter must be a string")))
            .collect::<Result<_, _>>()?;
        match kind {
            "monoid" => {
                let alpha = Alphabet::monoid(&letters)?;
                let mut rules = Vec::new();
                if let Some(arr) = v.get("rules").and_then(|r| r.as_array()) {
                    for r in arr {
                        let l = r.get("lhs").and_then(|x| x.as_str()).ok_or_else(|| bad("rule lhs"))?;
                        let rr = r.get("rhs").and_then(|x| x.as_str()).ok_or_else(|| bad("rule rhs"))?;
                        rules.push(Rule::plain(alpha.parse_word(l)?, alpha.parse_word(rr)?)?);
                    }
                }
                Presentation::monoid(alpha, rules)
            }
            "group" => {
                let alpha = Alphabet::group(&letters)?;
                let mut relators = Vec::new();
                if let Some(arr) = v.get("relators").and_then(|r| r.as_array()) {
                    for r in arr {
                        let s = r.as_str().ok_or_else(|| bad("relator must be a string"))?;
                        relators.push(alpha.parse_word(s)?);
                    }
                }
                Presentation::group(alpha, relators)
            }
            other => Err(bad(&format!("unknown kind `{other}`"))),
        }
    }
}

fn eat_eq<'a>(rest: &'a str, line: usize) -> Result<&'a str, PresentationError> {
    rest.trim()
        .strip_prefix('=')
        .map(str::trim)
        .ok_or(PresentationError::Parse { line, msg: "expected `=`".into() })
}

fn dedup_rules(rules: Vec<Rule>) -> Vec<Rule> {
    let mut out: Vec<Rule> = Vec::with_capacity(rules.len());
    for r in rules {
        if !out.iter().any(|o| o.pair == r.pair) {
            out.push(r);
        }
    }
    out
}

pub(crate) fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

fn gen_names(k: usize) -> Result<Vec<String>, PresentationError> {
    if k == 0 || k > 26 {
        return Err(PresentationError::UnknownBuiltin(format!("{k} generators (1..=26 supported)")));
    }
    Ok((0..k).map(|i| ((b'a' + i as u8) as char).to_string()).collect())
}

/// Built-in presentations: `free_monoid(k)`, `free_group_monoid(k)`,
/// `free_commutative_monoid(k)` and `free_abelian_group(k)`.
pub fn builtin(name: &str) -> Result<Presentation, PresentationError> {
    let err = || PresentationError::UnknownBuiltin(name.to_string());
    let (head, rest) = name.split_once('(').ok_or_else(err)?;
    let k: usize = rest.strip_suffix(')').ok_or_else(err)?.trim().parse().map_err(|_| err())?;
    let names = gen_names(k)?;
    match head.trim() {
        "free_monoid" => Presentation::monoid(Alphabet::monoid(&names)?, Vec::new()),
        "free_group_monoid" => {
            // the free group as a monoid over X u X^-1: only the
            // cancellation rules, tagged Free so group-aware cost models
            // apply directly
            let alpha = Alphabet::group(&names)?;
            let mut rules = Vec::new();
            for l in 0..alpha.len() as u16 {
                let inv = alpha.inverse_of(l).unwrap();
                let lhs = Word::from_letters(alpha.clone(), vec![l, inv]);
                rules.push(Rule {
                    pair: RelationPair::new(lhs, Word::empty(alpha.clone()))?,
                    origin: RuleOrigin::Free,
                });
            }
            Presentation::monoid(alpha, rules)
        }
        "free_commutative_monoid" => {
            let alpha = Alphabet::monoid(&names)?;
            let mut rules = Vec::new();
            for x in 0..k as u16 {
                for y in 0..k as u16 {
                    if x == y {
                        continue;
                    }
                    let lhs = Word::from_letters(alpha.clone(), vec![x, y]);
                    let rhs = Word::from_letters(alpha.clone(), vec![y, x]);
                    rules.push(Rule::plain(lhs, rhs)?);
                }
            }
            Presentation::monoid(alpha, rules)
        }
        "free_abelian_group" => {
            let alpha = Alphabet::group(&names)?;
            let mut relators = Vec::new();
            let pos = alpha.positive_letters();
            for &x in &pos {
                for &y in &pos {
                    if x == y {
                        continue;
                    }
                    let xi = alpha.inverse_of(x).unwrap();
                    let yi = alpha.inverse_of(y).unwrap();
                    relators.push(Word::from_letters(alpha.clone(), vec![x, y, xi, yi]));
                }
            }
            Presentation::group(alpha, relators)
        }
        _ => Err(err()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_to_monoid_of_z3() {
        let p = Presentation::from_text("kind = group\nletters = a\nrel aaa\n").unwrap();
        let m = p.group_to_monoid().unwrap();
        let rules = m.finite_rules().unwrap();
        let rendered: Vec<String> = rules.iter().map(|r| r.pair.render()).collect();
        assert_eq!(
            rendered,
            vec![
                "1 = AAA", "a = AA", "aa = A", "aaa = 1", // splits of aaa
                "aA = 1", "Aa = 1",                        // cancellation
            ]
        );
        let non_free = rules.iter().filter(|r| r.origin != RuleOrigin::Free).count();
        assert_eq!(non_free, 1 + 3); // |R| + total relator length
    }

    #[test]
    fn group_to_monoid_rule_count_general() {
        let p = builtin("free_abelian_group(2)").unwrap();
        let m = p.group_to_monoid().unwrap();
        let rules = m.finite_rules().unwrap();
        let non_free = rules.iter().filter(|r| r.origin != RuleOrigin::Free).count();
        // |R| + sum of relator lengths = 2 + 8
        assert_eq!(non_free, 10);
        assert_eq!(rules.len() - non_free, 4);
    }

    #[test]
    fn symmetrize_dedups() {
        let p = builtin("free_commutative_monoid(2)").unwrap();
        let s = p.symmetrize().unwrap();
        // (ab,ba) and (ba,ab) are already mutual reversals
        assert_eq!(s.finite_rules().unwrap().len(), 2);
    }

    #[test]
    fn builtins_shape() {
        let p = builtin("free_commutative_monoid(2)").unwrap();
        let rendered: Vec<String> =
            p.finite_rules().unwrap().iter().map(|r| r.pair.render()).collect();
        assert_eq!(rendered, vec!["ab = ba", "ba = ab"]);
        assert!(builtin("free_monoid(2)").unwrap().finite_rules().unwrap().is_empty());
        assert!(builtin("nope(2)").is_err());
        assert!(builtin("free_monoid(0)").is_err());
    }

    #[test]
    fn text_round_trip() {
        let text = "kind = monoid\nletters = a b\nrule ab = ba\nrule ba = ab\n";
        let p = Presentation::from_text(text).unwrap();
        assert_eq!(p.to_text().unwrap(), text);
        let g = builtin("free_abelian_group(2)").unwrap();
        let back = Presentation::from_text(&g.to_text().unwrap()).unwrap();
        assert_eq!(back.relators().unwrap(), g.relators().unwrap());
    }

    #[test]
    fn json_round_trip() {
        for name in ["free_commutative_monoid(2)", "free_abelian_group(2)"] {
            let p = builtin(name).unwrap();
            let back = Presentation::from_json(&p.to_json().unwrap()).unwrap();
            assert_eq!(back.to_text().unwrap(), p.to_text().unwrap());
        }
    }

    #[test]
    fn parse_errors_are_reported_with_lines() {
        let e = Presentation::from_text("kind = monoid\nletters = a\nbogus\n").unwrap_err();
        assert!(matches!(e, PresentationError::Parse { line: 3, .. }));
        let e = Presentation::from_text("kind = monoid\nletters = a\nrule ab = b\n").unwrap_err();
        assert!(matches!(e, PresentationError::Parse { line: 3, .. }));
    }

    #[test]
    fn relators_must_be_reduced() {
        let alpha = Alphabet::group(&["a"]).unwrap();
        let w = alpha.parse_word("aaA").unwrap();
        assert!(matches!(
            Presentation::group(alpha, vec![w]),
            Err(PresentationError::RelatorNotReduced(_))
        ));
    }

    #[test]
    fn padded_oracle_agrees_with_enumerator() {
        // enumerator n -> (a^{n+1}, b)
        let alpha = Alphabet::monoid(&["a", "b"]).unwrap();
        let enumerate: Enumerator = {
            let alpha = alpha.clone();
            Arc::new(move |n| {
                let lhs = Word::from_letters(alpha.clone(), vec![0; n as usize + 1]);
                let rhs = Word::from_letters(alpha.clone(), vec![1]);
                Some(RelationPair::new(lhs, rhs).unwrap())
            })
        };
        let p = Presentation {
            kind: Kind::Monoid,
            alphabet: alpha,
            rules: RuleSource::Enumerable(EnumerableOracle { enumerate }),
            oracle_budget: 100,
        };
        let padded = p.pad_enumerable("e").unwrap();
        let (decide, enumerate) = match &padded.rules {
            RuleSource::Decidable(o) => (o.decide.clone(), o.enumerate.clone()),
            _ => panic!("expected decidable oracle"),
        };
        // every enumerated rule is accepted by the decider
        for n in 0..50 {
            let r = enumerate(n).unwrap();
            assert!(decide(&r), "rule {} rejected", r.render());
        }
        // e a a = b is the padded form of output 1 = (aa, b)
        let ea = padded.alphabet.parse_word("eaa").unwrap();
        let b = padded.alphabet.parse_word("b").unwrap();
        assert!(decide(&RelationPair::new(ea, b.clone()).unwrap()));
        // but e e a a = b is not a rule (output 2 is (aaa, b))
        let eea = padded.alphabet.parse_word("eeaa").unwrap();
        assert!(!decide(&RelationPair::new(eea, b).unwrap()));
    }

    #[test]
    fn content_hash_is_stable() {
        let a = builtin("free_commutative_monoid(2)").unwrap();
        let b = builtin("free_commutative_monoid(2)").unwrap();
        assert_eq!(a.content_hash(), b.content_hash());
        let c = builtin("free_commutative_monoid(3)").unwrap();
        assert_ne!(a.content_hash(), c.content_hash());
    }
}
