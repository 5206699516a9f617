//! Symbolic presentation of the underlying system `(X, Y, σ)`.
//!
//! Both kinds of system are one-sided shifts of finite type over a finite
//! alphabet. A finite permutative system on `k` points is the SFT whose
//! transition matrix is the permutation matrix of `σ`: every point `a` has the
//! unique forward itinerary `a σ(a) σ²(a) …`, so the shift on itineraries is
//! `σ` itself.
//!
//! Cycle convention: a cycle word `c₀c₁…c_{N-1}` denotes the point with
//! forward expansion `(c₀c₁…c_{N-1})^∞`, and `σ` maps it to `(c₁…c_{N-1}c₀)^∞`.
//! For a permutation this reads `σ(c_i) = c_{i+1}`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of a symbol in the alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Symbol(pub u16);

impl Symbol {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SystemKind {
    #[serde(rename = "permutation")]
    FinitePermutative,
    Sft,
}

/// A validated presentation of `(X, Y, σ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SftSystem {
    kind: SystemKind,
    alphabet: Vec<String>,
    transition: Vec<Vec<u8>>,
    domain: Vec<String>,
    #[serde(skip)]
    in_domain: Vec<bool>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    kind: String,
    alphabet: Vec<String>,
    transition: Vec<Vec<i64>>,
    domain: Option<Vec<String>>,
}

impl SftSystem {
    /// Parses the key-value config format:
    ///
    /// ```toml
    /// kind = "sft"            # or "permutation"
    /// alphabet = ["0", "1"]
    /// transition = [[1, 1], [1, 0]]
    /// domain = ["0", "1"]     # optional, defaults to the alphabet
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        let kind = match raw.kind.as_str() {
            "sft" => SystemKind::Sft,
            "permutation" => SystemKind::FinitePermutative,
            other => return Err(Error::Config(format!("unknown kind {other:?}"))),
        };
        let k = raw.alphabet.len();
        let mut transition = Vec::with_capacity(raw.transition.len());
        if raw.transition.len() != k {
            return Err(Error::NonSquare {
                row: raw.transition.len().min(k),
                expected: k,
                found: raw.transition.get(k).map_or(0, Vec::len),
            });
        }
        for (row, entries) in raw.transition.iter().enumerate() {
            if entries.len() != k {
                return Err(Error::NonSquare {
                    row,
                    expected: k,
                    found: entries.len(),
                });
            }
            let mut out = Vec::with_capacity(k);
            for (col, &value) in entries.iter().enumerate() {
                match value {
                    0 | 1 => out.push(value as u8),
                    _ => return Err(Error::BadEntry { row, col, value }),
                }
            }
            transition.push(out);
        }
        Self::new(kind, raw.alphabet, transition, raw.domain)
    }

    /// Builds and validates a system. `domain = None` means `Y = X`.
    pub fn new(
        kind: SystemKind,
        alphabet: Vec<String>,
        transition: Vec<Vec<u8>>,
        domain: Option<Vec<String>>,
    ) -> Result<Self> {
        if alphabet.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if alphabet.len() > u16::MAX as usize {
            return Err(Error::Config("alphabet too large".into()));
        }
        let mut seen = BTreeSet::new();
        for name in &alphabet {
            if name.is_empty()
                || name
                    .chars()
                    .any(|c| c.is_whitespace() || ".^@[],".contains(c))
            {
                return Err(Error::BadSymbolName(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateSymbol(name.clone()));
            }
        }
        let k = alphabet.len();
        if transition.len() != k {
            return Err(Error::NonSquare {
                row: transition.len().min(k),
                expected: k,
                found: 0,
            });
        }
        for (row, entries) in transition.iter().enumerate() {
            if entries.len() != k {
                return Err(Error::NonSquare {
                    row,
                    expected: k,
                    found: entries.len(),
                });
            }
            if let Some(col) = entries.iter().position(|&v| v > 1) {
                return Err(Error::BadEntry {
                    row,
                    col,
                    value: entries[col] as i64,
                });
            }
        }
        for a in 0..k {
            if !transition[a].contains(&1) {
                return Err(Error::NoSuccessor(alphabet[a].clone()));
            }
            if !(0..k).any(|b| transition[b][a] == 1) {
                return Err(Error::NoPredecessor(alphabet[a].clone()));
            }
        }
        if kind == SystemKind::FinitePermutative {
            for (row, entries) in transition.iter().enumerate() {
                if entries.iter().filter(|&&v| v == 1).count() != 1 {
                    return Err(Error::NotPermutation(row));
                }
            }
            // Column sums are already >= 1 by the predecessor check; with one
            // 1 per row that forces exactly one per column.
        }
        let in_domain = match &domain {
            None => vec![true; k],
            Some(names) => {
                let mut mask = vec![false; k];
                for name in names {
                    let idx = alphabet
                        .iter()
                        .position(|a| a == name)
                        .ok_or_else(|| Error::UnknownSymbol(name.clone()))?;
                    mask[idx] = true;
                }
                mask
            }
        };
        if kind == SystemKind::FinitePermutative && in_domain.iter().any(|&b| !b) {
            return Err(Error::PermutationDomain);
        }
        let domain = alphabet
            .iter()
            .zip(&in_domain)
            .filter(|(_, &b)| b)
            .map(|(a, _)| a.clone())
            .collect();
        Ok(SftSystem {
            kind,
            alphabet,
            transition,
            domain,
            in_domain,
        })
    }

    /// Full shift on `k` symbols named `0..k`, with an optional domain subset.
    pub fn full_shift(k: usize, domain: Option<&[usize]>) -> Result<Self> {
        let alphabet: Vec<String> = (0..k).map(|i| i.to_string()).collect();
        let domain = domain.map(|d| d.iter().map(|i| i.to_string()).collect());
        Self::new(SystemKind::Sft, alphabet, vec![vec![1; k]; k], domain)
    }

    /// Golden-mean shift: the word `11` is forbidden.
    pub fn golden_mean(domain: Option<&[usize]>) -> Result<Self> {
        let domain = domain.map(|d| d.iter().map(|i| i.to_string()).collect());
        Self::new(
            SystemKind::Sft,
            vec!["0".into(), "1".into()],
            vec![vec![1, 1], vec![1, 0]],
            domain,
        )
    }

    /// Permutative system on `image.len()` points with `σ(i) = image[i]`.
    pub fn permutation(image: &[usize]) -> Result<Self> {
        let k = image.len();
        let alphabet: Vec<String> = (0..k).map(|i| i.to_string()).collect();
        let mut transition = vec![vec![0u8; k]; k];
        for (i, &j) in image.iter().enumerate() {
            if j >= k {
                return Err(Error::NotPermutation(i));
            }
            transition[i][j] = 1;
        }
        Self::new(SystemKind::FinitePermutative, alphabet, transition, None)
    }

    pub fn kind(&self) -> SystemKind {
        self.kind
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn size(&self) -> usize {
        self.alphabet.len()
    }

    pub fn transition(&self) -> &[Vec<u8>] {
        &self.transition
    }

    /// Names of the symbols whose length-1 cylinders make up `Y`.
    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> {
        (0..self.alphabet.len() as u16).map(Symbol)
    }

    pub fn in_domain(&self, s: Symbol) -> bool {
        self.in_domain[s.index()]
    }

    pub fn allows(&self, from: Symbol, to: Symbol) -> bool {
        self.transition[from.index()][to.index()] == 1
    }

    pub fn name(&self, s: Symbol) -> &str {
        &self.alphabet[s.index()]
    }

    pub fn symbol(&self, name: &str) -> Result<Symbol> {
        self.alphabet
            .iter()
            .position(|a| a == name)
            .map(|i| Symbol(i as u16))
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    /// True when every symbol name is a single character, so words can be
    /// written by plain concatenation.
    pub fn compact_names(&self) -> bool {
        self.alphabet.iter().all(|a| a.chars().count() == 1)
    }

    pub fn format_word(&self, word: &[Symbol]) -> String {
        let sep = if self.compact_names() { "" } else { "," };
        word.iter()
            .map(|&s| self.name(s))
            .collect::<Vec<_>>()
            .join(sep)
    }

    pub fn parse_word(&self, text: &str) -> Result<Vec<Symbol>> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Vec::new());
        }
        if text.contains(',') || !self.compact_names() {
            text.split(',').map(|t| self.symbol(t.trim())).collect()
        } else {
            text.chars().map(|c| self.symbol(&c.to_string())).collect()
        }
    }

    /// Checks every adjacent pair of `word` (not the wraparound).
    pub fn check_path(&self, word: &[Symbol]) -> Result<()> {
        for (i, pair) in word.windows(2).enumerate() {
            if !self.allows(pair[0], pair[1]) {
                return Err(Error::Inadmissible {
                    position: i as i64,
                    from: self.name(pair[0]).to_string(),
                    to: self.name(pair[1]).to_string(),
                });
            }
        }
        Ok(())
    }

    fn is_cyclically_admissible(&self, word: &[Symbol]) -> bool {
        !word.is_empty()
            && word.windows(2).all(|p| self.allows(p[0], p[1]))
            && self.allows(word[word.len() - 1], word[0])
    }

    /// `α` is injective iff `σ: Y → X` is onto: every symbol must be able to
    /// follow some domain symbol.
    pub fn check_alpha_injective(&self) -> bool {
        self.symbols().all(|b| {
            self.symbols()
                .any(|s| self.in_domain(s) && self.allows(s, b))
        })
    }

    /// `α` is unital iff `Y = X`.
    pub fn check_alpha_unital(&self) -> bool {
        self.in_domain.iter().all(|&b| b)
    }

    /// All primitive admissible cycles of length `<= max_len`, each in its
    /// least rotation, ordered by length then lexicographically.
    pub fn enumerate_cycles(&self, max_len: usize) -> Vec<Cycle> {
        let mut out = Vec::new();
        for len in 1..=max_len {
            let mut word = Vec::with_capacity(len);
            for start in self.symbols() {
                word.clear();
                word.push(start);
                self.extend_cycles(&mut word, len, &mut out);
            }
        }
        out
    }

    fn extend_cycles(&self, word: &mut Vec<Symbol>, len: usize, out: &mut Vec<Cycle>) {
        if word.len() == len {
            if self.allows(word[len - 1], word[0]) && is_lyndon(word) {
                out.push(Cycle { word: word.clone() });
            }
            return;
        }
        let last = word[word.len() - 1];
        for next in self.symbols() {
            // a Lyndon word never has a symbol smaller than its first one
            if next < word[0] || !self.allows(last, next) {
                continue;
            }
            word.push(next);
            self.extend_cycles(word, len, out);
            word.pop();
        }
    }

    /// `trace(Aⁿ)`, the number of points of period dividing `n` in the
    /// two-sided shift.
    pub fn count_periodic_points(&self, n: usize) -> Result<u128> {
        if n == 0 {
            return Err(Error::Bound { name: "n", min: 1 });
        }
        let k = self.size();
        let a: Vec<Vec<u128>> = self
            .transition
            .iter()
            .map(|r| r.iter().map(|&v| v as u128).collect())
            .collect();
        let mut power = a.clone();
        for _ in 1..n {
            let mut next = vec![vec![0u128; k]; k];
            for i in 0..k {
                for (l, &p) in power[i].iter().enumerate() {
                    if p == 0 {
                        continue;
                    }
                    for j in 0..k {
                        let term = p
                            .checked_mul(a[l][j])
                            .ok_or(Error::Overflow("matrix power"))?;
                        next[i][j] = next[i][j]
                            .checked_add(term)
                            .ok_or(Error::Overflow("matrix power"))?;
                    }
                }
            }
            power = next;
        }
        (0..k).try_fold(0u128, |acc, i| {
            acc.checked_add(power[i][i]).ok_or(Error::Overflow("trace"))
        })
    }
}

/// A primitive admissible cycle in least-rotation form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    word: Vec<Symbol>,
}

impl Cycle {
    /// Validates and canonicalizes: the word is reduced to its primitive root
    /// and rotated to its least rotation.
    pub fn new(sys: &SftSystem, word: &[Symbol]) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::EmptyWord);
        }
        sys.check_path(word)?;
        let (last, first) = (word[word.len() - 1], word[0]);
        if !sys.allows(last, first) {
            return Err(Error::Inadmissible {
                position: word.len() as i64 - 1,
                from: sys.name(last).to_string(),
                to: sys.name(first).to_string(),
            });
        }
        Ok(Self::from_necklace(word))
    }

    /// Canonicalizes without admissibility checks.
    pub(crate) fn from_necklace(word: &[Symbol]) -> Self {
        let root = primitive_root(word);
        let shift = least_rotation(root);
        Cycle {
            word: rotate_left(root, shift),
        }
    }

    pub fn word(&self) -> &[Symbol] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn display(&self, sys: &SftSystem) -> String {
        sys.format_word(&self.word)
    }

    pub(crate) fn is_admissible(&self, sys: &SftSystem) -> bool {
        sys.is_cyclically_admissible(&self.word)
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.word {
            write!(f, "{}", s.0)?;
        }
        Ok(())
    }
}

/// Shortest `u` with `word = u^m`.
pub(crate) fn primitive_root(word: &[Symbol]) -> &[Symbol] {
    let n = word.len();
    for d in 1..=n {
        if n.is_multiple_of(d) && (d..n).all(|i| word[i] == word[i - d]) {
            return &word[..d];
        }
    }
    word
}

/// Start index of the lexicographically least rotation.
pub(crate) fn least_rotation(word: &[Symbol]) -> usize {
    let n = word.len();
    (0..n)
        .min_by(|&a, &b| {
            (0..n)
                .map(|i| word[(a + i) % n])
                .cmp((0..n).map(|i| word[(b + i) % n]))
        })
        .unwrap_or(0)
}

pub(crate) fn rotate_left(word: &[Symbol], shift: usize) -> Vec<Symbol> {
    let n = word.len();
    (0..n).map(|i| word[(i + shift) % n]).collect()
}

/// Strictly smaller than every proper rotation.
pub(crate) fn is_lyndon(word: &[Symbol]) -> bool {
    let n = word.len();
    (1..n).all(|r| {
        (0..n)
            .map(|i| word[i])
            .lt((0..n).map(|i| word[(i + r) % n]))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syms(v: &[u16]) -> Vec<Symbol> {
        v.iter().map(|&s| Symbol(s)).collect()
    }

    #[test]
    fn parse_full_shift() {
        let sys = SftSystem::parse(
            r#"kind = "sft"
alphabet = ["0", "1"]
transition = [[1, 1], [1, 1]]
domain = ["0", "1"]
"#,
        )
        .unwrap();
        assert_eq!(sys.kind(), SystemKind::Sft);
        assert!(sys.check_alpha_unital());
    }

    #[test]
    fn parse_golden_mean_is_essential() {
        let sys = SftSystem::parse(
            "kind = \"sft\"\nalphabet = [\"0\", \"1\"]\ntransition = [[1, 1], [1, 0]]\n",
        )
        .unwrap();
        for (i, row) in sys.transition().iter().enumerate() {
            assert!(row.iter().sum::<u8>() >= 1);
            assert!(sys.transition().iter().map(|r| r[i]).sum::<u8>() >= 1);
        }
    }

    #[test]
    fn parse_rejects_dead_symbol() {
        let err = SftSystem::parse(
            "kind = \"sft\"\nalphabet = [\"0\", \"1\"]\ntransition = [[1, 0], [0, 0]]\n",
        )
        .unwrap_err();
        assert_eq!(err.to_string(), "symbol 1 has no successor");
    }

    #[test]
    fn parse_rejects_bad_shapes() {
        let non_square = SftSystem::parse(
            "kind = \"sft\"\nalphabet = [\"0\", \"1\"]\ntransition = [[1, 1], [1]]\n",
        );
        assert!(matches!(non_square, Err(Error::NonSquare { row: 1, .. })));
        let bad_entry = SftSystem::parse(
            "kind = \"sft\"\nalphabet = [\"0\", \"1\"]\ntransition = [[1, 2], [1, 1]]\n",
        );
        assert!(matches!(bad_entry, Err(Error::BadEntry { value: 2, .. })));
        let not_perm = SftSystem::parse(
            "kind = \"permutation\"\nalphabet = [\"0\", \"1\"]\ntransition = [[1, 1], [1, 0]]\n",
        );
        assert!(matches!(not_perm, Err(Error::NotPermutation(0))));
        let perm_domain = SftSystem::parse(
            "kind = \"permutation\"\nalphabet = [\"0\", \"1\"]\ntransition = [[0, 1], [1, 0]]\ndomain = [\"0\"]\n",
        );
        assert_eq!(perm_domain, Err(Error::PermutationDomain));
        let unknown = SftSystem::parse(
            "kind = \"sft\"\nalphabet = [\"0\", \"1\"]\ntransition = [[1, 1], [1, 1]]\ndomain = [\"7\"]\n",
        );
        assert!(matches!(unknown, Err(Error::UnknownSymbol(_))));
    }

    #[test]
    fn injectivity_and_unitality() {
        let full0 = SftSystem::full_shift(2, Some(&[0])).unwrap();
        assert!(full0.check_alpha_injective());
        assert!(!full0.check_alpha_unital());
        let gm1 = SftSystem::golden_mean(Some(&[1])).unwrap();
        assert!(!gm1.check_alpha_injective());
        let perm = SftSystem::permutation(&[1, 2, 0]).unwrap();
        assert!(perm.check_alpha_injective());
        assert!(perm.check_alpha_unital());
        assert!(SftSystem::full_shift(2, None).unwrap().check_alpha_unital());
    }

    #[test]
    fn cycles_of_small_systems() {
        let full = SftSystem::full_shift(2, None).unwrap();
        let got: Vec<String> = full
            .enumerate_cycles(3)
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(got, ["0", "1", "01", "001", "011"]);

        let gm = SftSystem::golden_mean(None).unwrap();
        let got: Vec<String> = gm
            .enumerate_cycles(2)
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(got, ["0", "01"]);

        let perm = SftSystem::permutation(&[1, 2, 0]).unwrap();
        let got: Vec<String> = perm
            .enumerate_cycles(3)
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(got, ["012"]);
    }

    #[test]
    fn cycle_canonicalization() {
        let full = SftSystem::full_shift(2, None).unwrap();
        let c = Cycle::new(&full, &syms(&[1, 0, 1, 0])).unwrap();
        assert_eq!(c.word(), syms(&[0, 1]).as_slice());
        let gm = SftSystem::golden_mean(None).unwrap();
        assert!(matches!(
            Cycle::new(&gm, &syms(&[1])),
            Err(Error::Inadmissible { .. })
        ));
    }

    #[test]
    fn periodic_point_counts() {
        let full = SftSystem::full_shift(2, None).unwrap();
        assert_eq!(full.count_periodic_points(4).unwrap(), 16);
        let gm = SftSystem::golden_mean(None).unwrap();
        let counts: Vec<u128> = (1..=6)
            .map(|n| gm.count_periodic_points(n).unwrap())
            .collect();
        assert_eq!(counts, [1, 3, 4, 7, 11, 18]);
        assert_eq!(gm.count_periodic_points(1).unwrap(), 1);
    }

    #[test]
    fn periodic_point_overflow_is_reported() {
        let big = SftSystem::full_shift(16, None).unwrap();
        assert_eq!(
            big.count_periodic_points(40),
            Err(Error::Overflow("matrix power"))
        );
    }

    #[test]
    fn word_helpers() {
        assert!(is_lyndon(&syms(&[0, 0, 1])));
        assert!(!is_lyndon(&syms(&[0, 1, 0, 1])));
        assert_eq!(
            primitive_root(&syms(&[1, 0, 1, 0])),
            syms(&[1, 0]).as_slice()
        );
        assert_eq!(least_rotation(&syms(&[1, 1, 0])), 2);
    }
}
