//! Pregroup types and contraction-based grammaticality checking.
//!
//! A word type is a sequence of basic types with integer adjoint orders
//! (`l(n).s.r(n)` for a transitive verb). A sentence is well typed when the
//! concatenation of its word types reduces to the sentence type by repeatedly
//! cancelling adjacent pairs. The reduction witness records which positions
//! cancelled against which; downstream it doubles as the cup wiring of the
//! sentence diagram.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PregroupError {
    #[error("unknown basic type `{name}` at byte {position}")]
    UnknownBasicType { name: String, position: usize },

    #[error("type syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("invalid basic type name `{0}`")]
    InvalidName(String),

    #[error("reduction target must have adjoint order 0, got {0}")]
    TargetNotPlain(i32),

    #[error("witness does not fit the sequence: {0}")]
    WitnessMismatch(String),

    #[error("lexicon line {line}: {message}")]
    Lexicon { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A registered basic grammatical type such as `n` or `s`.
///
/// Values are cheap to clone and compare; they can only be created through an
/// [`Alphabet`] (or by deserialising a diagram file, which acts as its own
/// declaration).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasicType(Arc<str>);

impl BasicType {
    pub(crate) fn from_name(name: &str) -> Self {
        BasicType(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for BasicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for BasicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BasicType({})", self.0)
    }
}

impl Serialize for BasicType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for BasicType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let name = String::deserialize(d)?;
        Ok(BasicType::from_name(&name))
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

/// The registered set of basic type names. Parsing rejects names that were
/// never registered; nothing creates basic types implicitly.
#[derive(Clone, Debug, Default)]
pub struct Alphabet {
    names: BTreeMap<String, BasicType>,
}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The two-type alphabet used for English: nouns `n` and sentences `s`.
    pub fn english() -> Self {
        let mut a = Self::new();
        a.register("n").unwrap();
        a.register("s").unwrap();
        a
    }

    /// Register a basic type name. Registering the same name twice returns
    /// the existing type.
    pub fn register(&mut self, name: &str) -> Result<BasicType, PregroupError> {
        if !valid_name(name) {
            return Err(PregroupError::InvalidName(name.to_string()));
        }
        Ok(self
            .names
            .entry(name.to_string())
            .or_insert_with(|| BasicType::from_name(name))
            .clone())
    }

    pub fn get(&self, name: &str) -> Option<&BasicType> {
        self.names.get(name)
    }

    /// Parse the ASCII concrete syntax for a type sequence.
    ///
    /// Grammar: atoms joined by `.`, where an atom is a registered name
    /// optionally wrapped in `l(...)` (one left adjoint per level, order −1)
    /// or `r(...)` (right adjoint, order +1). Wrappers nest for iterated
    /// adjoints. The empty string is the empty sequence.
    pub fn parse_type(&self, text: &str) -> Result<TypeSequence, PregroupError> {
        let parser = TypeParser {
            alphabet: self,
            bytes: text.as_bytes(),
            pos: 0,
        };
        parser.parse()
    }
}

struct TypeParser<'a> {
    alphabet: &'a Alphabet,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> TypeParser<'a> {
    fn parse(mut self) -> Result<TypeSequence, PregroupError> {
        let mut items = Vec::new();
        self.skip_ws();
        if self.pos == self.bytes.len() {
            return Ok(TypeSequence::new(items));
        }
        loop {
            items.push(self.atom()?);
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'.') => {
                    self.pos += 1;
                    self.skip_ws();
                }
                Some(c) => {
                    return Err(self.err(format!("expected `.` or end of input, found `{}`", c as char)))
                }
            }
        }
        Ok(TypeSequence::new(items))
    }

    fn atom(&mut self) -> Result<PregroupType, PregroupError> {
        let start = self.pos;
        let name = self.ident()?;
        if self.peek() == Some(b'(') {
            let shift = match name.as_str() {
                "l" => -1,
                "r" => 1,
                _ => {
                    return Err(PregroupError::Syntax {
                        position: start,
                        message: format!("`{name}(` is not a valid adjoint marker (use `l(` or `r(`)"),
                    })
                }
            };
            self.pos += 1;
            self.skip_ws();
            let inner = self.atom()?;
            self.skip_ws();
            if self.peek() != Some(b')') {
                return Err(self.err("expected `)`".to_string()));
            }
            self.pos += 1;
            Ok(PregroupType {
                base: inner.base,
                adjoint_order: inner.adjoint_order + shift,
            })
        } else {
            match self.alphabet.get(&name) {
                Some(base) => Ok(PregroupType {
                    base: base.clone(),
                    adjoint_order: 0,
                }),
                None => Err(PregroupError::UnknownBasicType {
                    name,
                    position: start,
                }),
            }
        }
    }

    fn ident(&mut self) -> Result<String, PregroupError> {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == b'_' || c == b'-' {
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.pos == start {
            let found = self
                .peek()
                .map(|c| format!("`{}`", c as char))
                .unwrap_or_else(|| "end of input".to_string());
            return Err(self.err(format!("expected a type name, found {found}")));
        }
        Ok(String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned())
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek() == Some(b' ') {
            self.pos += 1;
        }
    }

    fn err(&self, message: String) -> PregroupError {
        PregroupError::Syntax {
            position: self.pos,
            message,
        }
    }
}

/// A basic type together with an integer adjoint order: 0 is the plain type,
/// −1 its left adjoint (`l(x)`), +1 its right adjoint (`r(x)`); orders beyond
/// ±1 are iterated adjoints.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PregroupType {
    pub base: BasicType,
    pub adjoint_order: i32,
}

impl PregroupType {
    pub fn plain(base: BasicType) -> Self {
        PregroupType {
            base,
            adjoint_order: 0,
        }
    }

    pub fn left_adjoint(base: BasicType) -> Self {
        PregroupType {
            base,
            adjoint_order: -1,
        }
    }

    pub fn right_adjoint(base: BasicType) -> Self {
        PregroupType {
            base,
            adjoint_order: 1,
        }
    }
}

impl fmt::Display for PregroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.adjoint_order;
        let (marker, depth) = if k < 0 { ("l(", -k) } else { ("r(", k) };
        for _ in 0..depth {
            f.write_str(marker)?;
        }
        write!(f, "{}", self.base)?;
        for _ in 0..depth {
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// An ordered sequence of pregroup types; the empty sequence is the monoidal
/// unit.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TypeSequence {
    items: Vec<PregroupType>,
}

impl TypeSequence {
    pub fn new(items: Vec<PregroupType>) -> Self {
        TypeSequence { items }
    }

    pub fn items(&self) -> &[PregroupType] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Concatenation of several sequences, in order.
    pub fn concat<'a>(parts: impl IntoIterator<Item = &'a TypeSequence>) -> Self {
        let mut items = Vec::new();
        for p in parts {
            items.extend(p.items.iter().cloned());
        }
        TypeSequence { items }
    }
}

impl fmt::Display for TypeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.items.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Render a sequence in the concrete syntax accepted by
/// [`Alphabet::parse_type`]. Inverse of parsing on every representable value.
pub fn format_type(seq: &TypeSequence) -> String {
    seq.to_string()
}

/// Does the adjacent pair (left, right) cancel? Cancellation deletes
/// `x . l(x)` and `r(x) . x`, and in general a pair whose left adjoint order
/// is one more than its right adjoint order.
fn cancels(left: &PregroupType, right: &PregroupType) -> bool {
    left.base == right.base && left.adjoint_order == right.adjoint_order + 1
}

/// The record of a successful reduction: which original positions cancelled
/// against which, in contraction order. Drawn as arcs under the sequence the
/// pairs never cross.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionWitness {
    sequence_len: usize,
    pairs: Vec<(usize, usize)>,
}

impl ReductionWitness {
    pub fn sequence_len(&self) -> usize {
        self.sequence_len
    }

    /// Contracted index pairs (left, right), in the order they were applied.
    pub fn contractions(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Positions that survive the reduction, in sequence order.
    pub fn survivors(&self) -> Vec<usize> {
        let mut dead = vec![false; self.sequence_len];
        for &(i, j) in &self.pairs {
            dead[i] = true;
            dead[j] = true;
        }
        (0..self.sequence_len).filter(|&i| !dead[i]).collect()
    }

    /// Re-run the witness against a sequence, checking that every recorded
    /// pair is adjacent and cancelling at the time it fires. Returns the
    /// leftover sequence.
    pub fn replay(&self, seq: &TypeSequence) -> Result<TypeSequence, PregroupError> {
        if seq.len() != self.sequence_len {
            return Err(PregroupError::WitnessMismatch(format!(
                "witness is for a sequence of length {}, got {}",
                self.sequence_len,
                seq.len()
            )));
        }
        let mut alive = vec![true; seq.len()];
        for &(i, j) in &self.pairs {
            if i >= seq.len() || j >= seq.len() || i >= j {
                return Err(PregroupError::WitnessMismatch(format!(
                    "pair ({i}, {j}) out of range"
                )));
            }
            if !alive[i] || !alive[j] {
                return Err(PregroupError::WitnessMismatch(format!(
                    "pair ({i}, {j}) reuses a contracted position"
                )));
            }
            if alive[i + 1..j].iter().any(|&a| a) {
                return Err(PregroupError::WitnessMismatch(format!(
                    "pair ({i}, {j}) is not adjacent when applied"
                )));
            }
            if !cancels(&seq.items[i], &seq.items[j]) {
                return Err(PregroupError::WitnessMismatch(format!(
                    "pair ({i}, {j}) does not cancel: {} vs {}",
                    seq.items[i], seq.items[j]
                )));
            }
            alive[i] = false;
            alive[j] = false;
        }
        Ok(TypeSequence::new(
            seq.items
                .iter()
                .zip(&alive)
                .filter(|(_, &a)| a)
                .map(|(t, _)| t.clone())
                .collect(),
        ))
    }
}

/// Decide whether `seq` reduces to exactly `[target]` using contractions
/// only, which is complete for reductions to a basic type. Returns `None`
/// when no reduction exists. The witness is deterministic: each position
/// pairs with its nearest possible partner, and contractions fire
/// leftmost-innermost.
pub fn reduces_to(
    seq: &TypeSequence,
    target: &PregroupType,
) -> Result<Option<ReductionWitness>, PregroupError> {
    if target.adjoint_order != 0 {
        return Err(PregroupError::TargetNotPlain(target.adjoint_order));
    }
    let items = seq.items();
    let n = items.len();

    // vanish[i][j]: the span [i, j) cancels away completely.
    let mut vanish = vec![vec![false; n + 1]; n + 1];
    // partner[i][j]: the position item i cancels with inside [i, j).
    let mut partner = vec![vec![usize::MAX; n + 1]; n + 1];
    for i in 0..=n {
        vanish[i][i] = true;
    }
    for span in (2..=n).step_by(2) {
        for i in 0..=(n - span) {
            let j = i + span;
            for m in ((i + 1)..j).step_by(2) {
                if cancels(&items[i], &items[m]) && vanish[i + 1][m] && vanish[m + 1][j] {
                    vanish[i][j] = true;
                    partner[i][j] = m;
                    break;
                }
            }
        }
    }

    let survivor = (0..n).find(|&k| {
        items[k].adjoint_order == 0
            && items[k].base == target.base
            && vanish[0][k]
            && vanish[k + 1][n]
    });
    let Some(k) = survivor else {
        return Ok(None);
    };

    let mut arcs = Vec::new();
    collect_arcs(&partner, 0, k, &mut arcs);
    collect_arcs(&partner, k + 1, n, &mut arcs);
    Ok(Some(order_contractions(n, arcs)))
}

fn collect_arcs(partner: &[Vec<usize>], i: usize, j: usize, out: &mut Vec<(usize, usize)>) {
    if i >= j {
        return;
    }
    let m = partner[i][j];
    debug_assert_ne!(m, usize::MAX);
    out.push((i, m));
    collect_arcs(partner, i + 1, m, out);
    collect_arcs(partner, m + 1, j, out);
}

/// Order a set of nested arcs into a leftmost-innermost contraction sequence.
fn order_contractions(n: usize, mut arcs: Vec<(usize, usize)>) -> ReductionWitness {
    let mut alive = vec![true; n];
    let mut ordered = Vec::with_capacity(arcs.len());
    while !arcs.is_empty() {
        let idx = arcs
            .iter()
            .position(|&(i, j)| alive[i + 1..j].iter().all(|&a| !a))
            .expect("nested arcs always contain a ready pair");
        // arcs are scanned in discovery order; re-sort by left endpoint among
        // ready pairs to make the tie-break explicit
        let ready_min = arcs
            .iter()
            .enumerate()
            .filter(|(_, &(i, j))| alive[i + 1..j].iter().all(|&a| !a))
            .min_by_key(|(_, &(i, _))| i)
            .map(|(p, _)| p)
            .unwrap_or(idx);
        let (i, j) = arcs.swap_remove(ready_min);
        alive[i] = false;
        alive[j] = false;
        ordered.push((i, j));
    }
    ReductionWitness {
        sequence_len: n,
        pairs: ordered,
    }
}

/// A word → type-string table loaded from a lexicon file: one
/// `word<TAB>type-string` entry per line, `#` comment lines, UTF-8. The first
/// entry wins on duplicate words.
#[derive(Clone, Debug, Default)]
pub struct Lexicon {
    entries: BTreeMap<String, TypeSequence>,
    duplicates: usize,
}

impl Lexicon {
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self, PregroupError> {
        let mut lex = Lexicon::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (word, type_str) = line.split_once('\t').ok_or(PregroupError::Lexicon {
                line: idx + 1,
                message: "expected `word<TAB>type-string`".to_string(),
            })?;
            let word = word.trim();
            if word.is_empty() {
                return Err(PregroupError::Lexicon {
                    line: idx + 1,
                    message: "empty word".to_string(),
                });
            }
            let seq = alphabet
                .parse_type(type_str.trim())
                .map_err(|e| PregroupError::Lexicon {
                    line: idx + 1,
                    message: e.to_string(),
                })?;
            if lex.entries.contains_key(word) {
                lex.duplicates += 1;
            } else {
                lex.entries.insert(word.to_string(), seq);
            }
        }
        Ok(lex)
    }

    pub fn load(path: impl AsRef<Path>, alphabet: &Alphabet) -> Result<Self, PregroupError> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text, alphabet)
    }

    pub fn get(&self, word: &str) -> Option<&TypeSequence> {
        self.entries.get(word)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn duplicates(&self) -> usize {
        self.duplicates
    }
}

#[cfg(test)]
pub(crate) mod oracle {
    //! Brute-force contraction search, independent of the DP in `reduces_to`.
    //! Explores every contraction order over bitmasks of surviving positions.

    use super::{cancels, PregroupType};

    /// All length-1 leftovers reachable by contractions, as surviving-index
    /// bitmasks mapped to the surviving position.
    pub fn reachable_single_survivors(items: &[PregroupType]) -> Vec<usize> {
        let n = items.len();
        assert!(n <= 16);
        let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
        let mut seen = vec![false; 1 << n];
        let mut stack = vec![full];
        let mut survivors = Vec::new();
        while let Some(mask) = stack.pop() {
            if seen[mask as usize] {
                continue;
            }
            seen[mask as usize] = true;
            let alive: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            if alive.len() == 1 && !survivors.contains(&alive[0]) {
                survivors.push(alive[0]);
            }
            for w in alive.windows(2) {
                let (i, j) = (w[0], w[1]);
                if cancels(&items[i], &items[j]) {
                    stack.push(mask & !(1 << i) & !(1 << j));
                }
            }
        }
        survivors
    }

    pub fn reduces(items: &[PregroupType], target: &PregroupType) -> bool {
        reachable_single_survivors(items)
            .iter()
            .any(|&k| items[k] == *target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn english() -> Alphabet {
        Alphabet::english()
    }

    fn ty(alpha: &Alphabet, name: &str, order: i32) -> PregroupType {
        PregroupType {
            base: alpha.get(name).unwrap().clone(),
            adjoint_order: order,
        }
    }

    #[test]
    fn parse_plain() {
        let a = english();
        let seq = a.parse_type("n").unwrap();
        assert_eq!(seq.items(), &[ty(&a, "n", 0)]);
    }

    #[test]
    fn parse_transitive_verb() {
        let a = english();
        let seq = a.parse_type("l(n).s.r(n)").unwrap();
        assert_eq!(
            seq.items(),
            &[ty(&a, "n", -1), ty(&a, "s", 0), ty(&a, "n", 1)]
        );
    }

    #[test]
    fn parse_iterated_adjoint() {
        let a = english();
        let seq = a.parse_type("l(l(n))").unwrap();
        assert_eq!(seq.items(), &[ty(&a, "n", -2)]);
    }

    #[test]
    fn parse_unknown_name() {
        let a = english();
        match a.parse_type("n.q") {
            Err(PregroupError::UnknownBasicType { name, position }) => {
                assert_eq!(name, "q");
                assert_eq!(position, 2);
            }
            other => panic!("expected unknown-type error, got {other:?}"),
        }
    }

    #[test]
    fn parse_syntax_error_position() {
        let a = english();
        match a.parse_type("l(n") {
            Err(PregroupError::Syntax { position, .. }) => assert_eq!(position, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn parse_empty_is_unit() {
        let a = english();
        assert!(a.parse_type("").unwrap().is_empty());
        assert!(a.parse_type("  ").unwrap().is_empty());
    }

    #[test]
    fn format_round_trip_examples() {
        let a = english();
        for text in ["n", "l(n).s.r(n)", "l(l(n))", "r(r(s)).n", ""] {
            let seq = a.parse_type(text).unwrap();
            assert_eq!(a.parse_type(&format_type(&seq)).unwrap(), seq);
        }
    }

    proptest! {
        #[test]
        fn format_parse_round_trip(orders in proptest::collection::vec((-3i32..=3, prop::bool::ANY), 0..6)) {
            let a = english();
            let seq = TypeSequence::new(
                orders
                    .iter()
                    .map(|&(k, is_n)| PregroupType {
                        base: a.get(if is_n { "n" } else { "s" }).unwrap().clone(),
                        adjoint_order: k,
                    })
                    .collect(),
            );
            prop_assert_eq!(a.parse_type(&format_type(&seq)).unwrap(), seq);
        }
    }

    #[test]
    fn transitive_sentence_reduces() {
        let a = english();
        let seq = TypeSequence::concat([
            &a.parse_type("n").unwrap(),
            &a.parse_type("l(n).s.r(n)").unwrap(),
            &a.parse_type("n").unwrap(),
        ]);
        let w = reduces_to(&seq, &ty(&a, "s", 0)).unwrap().unwrap();
        assert_eq!(w.contractions(), &[(0, 1), (3, 4)]);
        assert_eq!(w.survivors(), vec![2]);
        let left = w.replay(&seq).unwrap();
        assert_eq!(left.items(), &[ty(&a, "s", 0)]);
    }

    #[test]
    fn sentence_type_is_already_reduced() {
        let a = english();
        let seq = a.parse_type("s").unwrap();
        let w = reduces_to(&seq, &ty(&a, "s", 0)).unwrap().unwrap();
        assert!(w.contractions().is_empty());
    }

    #[test]
    fn wrong_adjoint_sides_do_not_reduce() {
        let a = english();
        let seq = a.parse_type("n.r(n).l(n).n").unwrap();
        assert!(reduces_to(&seq, &ty(&a, "s", 0)).unwrap().is_none());
    }

    #[test]
    fn empty_sequence_does_not_reduce() {
        let a = english();
        let seq = a.parse_type("").unwrap();
        assert!(reduces_to(&seq, &ty(&a, "s", 0)).unwrap().is_none());
    }

    #[test]
    fn target_must_be_plain() {
        let a = english();
        let seq = a.parse_type("n").unwrap();
        assert!(matches!(
            reduces_to(&seq, &ty(&a, "n", 1)),
            Err(PregroupError::TargetNotPlain(1))
        ));
    }

    #[test]
    fn relative_pronoun_sentence_reduces_to_noun() {
        // Alice who hates Bob, with the pronoun wired as l(n).n.r(s).n.
        let a = english();
        let seq = TypeSequence::concat([
            &a.parse_type("n").unwrap(),
            &a.parse_type("l(n).n.r(s).n").unwrap(),
            &a.parse_type("l(n).s.r(n)").unwrap(),
            &a.parse_type("n").unwrap(),
        ]);
        let w = reduces_to(&seq, &ty(&a, "n", 0)).unwrap().unwrap();
        assert_eq!(w.survivors(), vec![2]);
        assert_eq!(w.contractions(), &[(0, 1), (4, 5), (3, 6), (7, 8)]);
        let left = w.replay(&seq).unwrap();
        assert_eq!(left.items(), &[ty(&a, "n", 0)]);
    }

    #[test]
    fn negated_sentence_reduces() {
        // Alice does not like Bob, with does/not typed l(n).s.r(s).n.
        let a = english();
        let aux = a.parse_type("l(n).s.r(s).n").unwrap();
        let seq = TypeSequence::concat([
            &a.parse_type("n").unwrap(),
            &aux,
            &aux,
            &a.parse_type("l(n).s.r(n)").unwrap(),
            &a.parse_type("n").unwrap(),
        ]);
        let w = reduces_to(&seq, &ty(&a, "s", 0)).unwrap().unwrap();
        assert_eq!(w.survivors(), vec![2]);
        assert_eq!(w.replay(&seq).unwrap().items(), &[ty(&a, "s", 0)]);
    }

    fn all_sequences(alpha: &Alphabet, len: usize) -> Vec<Vec<PregroupType>> {
        let mut symbols = Vec::new();
        for name in ["n", "s"] {
            for order in [-1, 0, 1] {
                symbols.push(ty(alpha, name, order));
            }
        }
        let mut out: Vec<Vec<PregroupType>> = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    symbols.iter().map(move |sym| {
                        let mut next = prefix.clone();
                        next.push(sym.clone());
                        next
                    })
                })
                .collect();
        }
        out
    }

    /// Exhaustive agreement with the brute-force oracle for short sequences;
    /// the acceptance suite drives the same check up to length 8.
    #[test]
    fn oracle_agreement_short() {
        let a = english();
        let targets = [ty(&a, "n", 0), ty(&a, "s", 0)];
        for len in 0..=5 {
            for items in all_sequences(&a, len) {
                let seq = TypeSequence::new(items.clone());
                for target in &targets {
                    let got = reduces_to(&seq, target).unwrap();
                    let expected = oracle::reduces(&items, target);
                    assert_eq!(
                        got.is_some(),
                        expected,
                        "disagreement on {seq} -> {target}"
                    );
                    if let Some(w) = got {
                        let left = w.replay(&seq).unwrap();
                        assert_eq!(left.items(), &[target.clone()]);
                        assert_planar(&w);
                    }
                }
            }
        }
    }

    pub(crate) fn assert_planar(w: &ReductionWitness) {
        let pairs = w.contractions();
        for (a, &(i, j)) in pairs.iter().enumerate() {
            for &(k, l) in &pairs[a + 1..] {
                let crossing = (i < k && k < j && j < l) || (k < i && i < l && l < j);
                assert!(!crossing, "arcs ({i},{j}) and ({k},{l}) cross");
            }
        }
    }

    #[test]
    fn lexicon_parses_and_first_entry_wins() {
        let a = english();
        let text = "# demo\nAlice\tn\nhates\tl(n).s.r(n)\nAlice\ts\n\n";
        let lex = Lexicon::parse(text, &a).unwrap();
        assert_eq!(lex.len(), 2);
        assert_eq!(lex.duplicates(), 1);
        assert_eq!(lex.get("Alice").unwrap().items(), &[ty(&a, "n", 0)]);
        assert!(lex.get("Bob").is_none());
    }

    #[test]
    fn lexicon_rejects_bad_lines() {
        let a = english();
        assert!(matches!(
            Lexicon::parse("word-without-tab", &a),
            Err(PregroupError::Lexicon { line: 1, .. })
        ));
        assert!(matches!(
            Lexicon::parse("w\tq", &a),
            Err(PregroupError::Lexicon { line: 1, .. })
        ));
    }
}
