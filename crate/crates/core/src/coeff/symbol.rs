use std::fmt;
use std::str::FromStr;

/// Number of letters in the fixed alphabet.
pub const NSYM: usize = 10;

/// The closed symbol alphabet, declared in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Q,
    U,
    V,
    A,
    B,
    C,
    D,
    X,
    Y,
    Z,
}

impl Symbol {
    pub const ALL: [Symbol; NSYM] = [
        Symbol::Q,
        Symbol::U,
        Symbol::V,
        Symbol::A,
        Symbol::B,
        Symbol::C,
        Symbol::D,
        Symbol::X,
        Symbol::Y,
        Symbol::Z,
    ];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    #[inline]
    pub fn from_index(i: usize) -> Symbol {
        Self::ALL[i]
    }

    pub fn name(self) -> &'static str {
        match self {
            Symbol::Q => "q",
            Symbol::U => "u",
            Symbol::V => "v",
            Symbol::A => "a",
            Symbol::B => "b",
            Symbol::C => "c",
            Symbol::D => "d",
            Symbol::X => "x",
            Symbol::Y => "y",
            Symbol::Z => "z",
        }
    }

    pub fn from_char(c: char) -> Option<Symbol> {
        Self::ALL.iter().copied().find(|s| s.name().starts_with(c))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Symbol {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Symbol::from_char(c).ok_or_else(|| format!("unknown symbol `{s}`")),
            _ => Err(format!("unknown symbol `{s}`")),
        }
    }
}
