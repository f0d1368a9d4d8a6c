//! Symbolic sequences as 0/1 indicator signals.
//!
//! Each alphabet symbol gets its own binary signal; the spectrum of the
//! sequence is the sum of the per-symbol spectra. Wildcards (`N` for DNA,
//! `X` for protein) are zero in every indicator.

use crate::error::{Error, Result};
use crate::period::RationalPeriod;
use crate::signal::Signal;
use crate::spectrum::fps;

const DNA: &[char] = &['A', 'C', 'G', 'T'];
const PROTEIN: &[char] = &[
    'A', 'C', 'D', 'E', 'F', 'G', 'H', 'I', 'K', 'L', 'M', 'N', 'P', 'Q', 'R', 'S', 'T', 'V', 'W',
    'Y',
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Alphabet {
    /// `A C G T`; `U` reads as `T`, `N` is a wildcard.
    Dna,
    /// The 20 standard amino acids; `X` is a wildcard.
    Protein,
    /// An explicit symbol set with no wildcard.
    Custom(Vec<char>),
}

impl Alphabet {
    /// Upper-cased, deduplicated custom alphabet.
    pub fn custom(symbols: impl IntoIterator<Item = char>) -> Result<Self> {
        let mut out: Vec<char> = Vec::new();
        for c in symbols {
            let c = c.to_ascii_uppercase();
            if c.is_whitespace() {
                return Err(Error::InvalidAlphabet("whitespace is not a symbol".into()));
            }
            if out.contains(&c) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol {c:?}")));
            }
            out.push(c);
        }
        if out.is_empty() {
            return Err(Error::InvalidAlphabet("no symbols".into()));
        }
        Ok(Alphabet::Custom(out))
    }

    pub fn symbols(&self) -> &[char] {
        match self {
            Alphabet::Dna => DNA,
            Alphabet::Protein => PROTEIN,
            Alphabet::Custom(s) => s,
        }
    }

    fn wildcard(&self) -> Option<char> {
        match self {
            Alphabet::Dna => Some('N'),
            Alphabet::Protein => Some('X'),
            Alphabet::Custom(_) => None,
        }
    }

    fn normalize(&self, c: char) -> char {
        let c = c.to_ascii_uppercase();
        match (self, c) {
            (Alphabet::Dna, 'U') => 'T',
            _ => c,
        }
    }

    /// DNA when every character is one of `ACGTUN` (any case), else protein.
    pub fn detect(text: &str) -> Alphabet {
        let dna = text
            .chars()
            .all(|c| matches!(c.to_ascii_uppercase(), 'A' | 'C' | 'G' | 'T' | 'U' | 'N'));
        if dna {
            Alphabet::Dna
        } else {
            Alphabet::Protein
        }
    }
}

/// A validated sequence, upper-cased, with `None` marking wildcard positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicSequence {
    symbols: Vec<Option<char>>,
    alphabet: Alphabet,
}

impl SymbolicSequence {
    pub fn new(text: &str, alphabet: Alphabet) -> Result<Self> {
        let symbols = text
            .chars()
            .enumerate()
            .map(|(position, raw)| {
                let c = alphabet.normalize(raw);
                if alphabet.symbols().contains(&c) {
                    Ok(Some(c))
                } else if alphabet.wildcard() == Some(c) {
                    Ok(None)
                } else {
                    Err(Error::InvalidSymbol {
                        symbol: raw,
                        position,
                    })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if symbols.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(Self { symbols, alphabet })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
}

/// One indicator signal per alphabet symbol, all of the sequence's length.
#[derive(Debug, Clone, PartialEq)]
pub struct IndicatorBundle {
    symbols: Vec<char>,
    signals: Vec<Signal>,
}

impl IndicatorBundle {
    pub fn new(symbols: Vec<char>, signals: Vec<Signal>) -> Result<Self> {
        if symbols.len() != signals.len() || signals.is_empty() {
            return Err(Error::RaggedBundle);
        }
        let m = signals[0].len();
        if signals.iter().any(|s| s.len() != m) {
            return Err(Error::RaggedBundle);
        }
        Ok(Self { symbols, signals })
    }

    pub fn len(&self) -> usize {
        self.signals[0].len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn signals(&self) -> &[Signal] {
        &self.signals
    }

    pub fn signal(&self, symbol: char) -> Option<&Signal> {
        let symbol = symbol.to_ascii_uppercase();
        self.symbols
            .iter()
            .position(|&s| s == symbol)
            .map(|i| &self.signals[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (char, &Signal)> {
        self.symbols.iter().copied().zip(&self.signals)
    }
}

pub fn to_indicators(s: &SymbolicSequence) -> IndicatorBundle {
    let symbols = s.alphabet.symbols().to_vec();
    let signals = symbols
        .iter()
        .map(|&sym| {
            let values = s
                .symbols
                .iter()
                .map(|&c| if c == Some(sym) { 1.0 } else { 0.0 })
                .collect();
            Signal::new(values).expect("non-empty 0/1 signal")
        })
        .collect();
    IndicatorBundle { symbols, signals }
}

/// Sum of the per-symbol powers at `p`.
pub fn aggregate_fps(b: &IndicatorBundle, p: RationalPeriod) -> Result<f64> {
    b.signals
        .iter()
        .try_fold(0.0, |acc, signal| Ok(acc + fps(signal, p)?))
}
