//! Sparse integer-coefficient polynomials in x₁..x_n, q, t.
//!
//! Only what the generating-function sums need: term accumulation, merge,
//! extraction of a q-power, the q/t swap, equality, and a line-oriented
//! text format. Coefficients are arbitrary-precision so filling counts can
//! never overflow. Terms are kept in a BTreeMap keyed by (qexp, texp,
//! xexp), so iteration order and the printed form are deterministic.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::{Error, Result};

/// q^a t^b x₁^e₁ ⋯ x_n^e_n. Ordering is (qexp, texp, xexp) ascending.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    qexp: u32,
    texp: u32,
    xexp: Vec<u32>,
}

impl Monomial {
    pub fn new(qexp: u32, texp: u32, xexp: Vec<u32>) -> Self {
        Monomial { qexp, texp, xexp }
    }

    pub fn constant(alphabet: usize) -> Self {
        Monomial::new(0, 0, vec![0; alphabet])
    }

    pub fn qexp(&self) -> u32 {
        self.qexp
    }

    pub fn texp(&self) -> u32 {
        self.texp
    }

    pub fn xexp(&self) -> &[u32] {
        &self.xexp
    }
}

/// A sparse polynomial over a fixed x-alphabet size. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    alphabet: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero(alphabet: usize) -> Self {
        MultiPoly {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Adds `c · m`, dropping the term if the coefficient cancels to zero.
    pub fn add_term(&mut self, m: Monomial, c: impl Into<BigInt>) -> Result<()> {
        if m.xexp.len() != self.alphabet {
            return Err(Error::AlphabetMismatch(m.xexp.len(), self.alphabet));
        }
        let c = c.into();
        if c == BigInt::ZERO {
            return Ok(());
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == BigInt::ZERO {
                    e.remove();
                }
            }
        }
        Ok(())
    }

    /// Adds every term of `other`; the associative merge used to combine
    /// partial sums built on separate threads.
    pub fn merge(&mut self, other: MultiPoly) -> Result<()> {
        if other.alphabet != self.alphabet {
            return Err(Error::AlphabetMismatch(other.alphabet, self.alphabet));
        }
        for (m, c) in other.terms {
            self.add_term(m, c)?;
        }
        Ok(())
    }

    /// The coefficient of q^k: all terms with qexp = k, with q removed.
    pub fn coeff_of_q(&self, k: u32) -> MultiPoly {
        let mut out = MultiPoly::zero(self.alphabet);
        for (m, c) in &self.terms {
            if m.qexp == k {
                out.add_term(Monomial::new(0, m.texp, m.xexp.clone()), c.clone())
                    .expect("same alphabet");
            }
        }
        out
    }

    /// Exchanges the q- and t-exponent of every monomial.
    pub fn swap_qt(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.alphabet);
        for (m, c) in &self.terms {
            out.add_term(Monomial::new(m.texp, m.qexp, m.xexp.clone()), c.clone())
                .expect("same alphabet");
        }
        out
    }

    pub fn max_q_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.qexp).max()
    }

    /// Exact term-by-term equality; comparing across alphabets is an error.
    pub fn equals(&self, other: &MultiPoly) -> Result<bool> {
        if other.alphabet != self.alphabet {
            return Err(Error::AlphabetMismatch(other.alphabet, self.alphabet));
        }
        Ok(self.terms == other.terms)
    }

    /// One-line description of where two polynomials differ, for failure
    /// reports.
    pub fn diff_summary(&self, other: &MultiPoly) -> String {
        let mut parts = Vec::new();
        for (m, c) in &self.terms {
            let oc = other.coeff(m);
            if *c != oc {
                parts.push(format!("{}: {} vs {}", render_monomial(m), c, oc));
            }
        }
        for (m, c) in &other.terms {
            if !self.terms.contains_key(m) {
                parts.push(format!("{}: 0 vs {}", render_monomial(m), c));
            }
        }
        if parts.is_empty() {
            "no differences".to_string()
        } else {
            parts.join("; ")
        }
    }

    /// One term per line, ascending monomial order; bit-exact across runs.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (m, c) in &self.terms {
            out.push_str(&c.to_string());
            let rendered = render_monomial(m);
            if !rendered.is_empty() {
                out.push(' ');
                out.push_str(&rendered);
            }
            out.push('\n');
        }
        out
    }

    /// Parses the `to_text` format. Duplicate monomials accumulate.
    pub fn from_text(alphabet: usize, text: &str) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(alphabet);
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let coeff_token = tokens.next().expect("non-empty line");
            let coeff: BigInt = coeff_token
                .parse()
                .map_err(|_| Error::BadPolyTerm(line.to_string()))?;
            let mut m = Monomial::constant(alphabet);
            for token in tokens {
                let (var, exp) = token
                    .split_once('^')
                    .ok_or_else(|| Error::BadPolyTerm(line.to_string()))?;
                let exp: u32 = exp
                    .parse()
                    .map_err(|_| Error::BadPolyTerm(line.to_string()))?;
                match var {
                    "q" => m.qexp += exp,
                    "t" => m.texp += exp,
                    _ => {
                        let idx: usize = var
                            .strip_prefix('x')
                            .and_then(|s| s.parse().ok())
                            .filter(|&i: &usize| i >= 1 && i <= alphabet)
                            .ok_or_else(|| Error::BadPolyTerm(line.to_string()))?;
                        m.xexp[idx - 1] += exp;
                    }
                }
            }
            out.add_term(m, coeff)?;
        }
        Ok(out)
    }
}

fn render_monomial(m: &Monomial) -> String {
    let mut parts = Vec::new();
    if m.qexp > 0 {
        parts.push(format!("q^{}", m.qexp));
    }
    if m.texp > 0 {
        parts.push(format!("t^{}", m.texp));
    }
    for (i, &e) in m.xexp.iter().enumerate() {
        if e > 0 {
            parts.push(format!("x{}^{}", i + 1, e));
        }
    }
    parts.join(" ")
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
