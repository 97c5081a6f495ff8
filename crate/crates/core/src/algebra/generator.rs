use std::fmt;

/// Z2 degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(b: u32) -> Self {
        if b.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u32 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn add(self, other: Parity) -> Parity {
        Parity::from_bit(self.bit() + other.bit())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PowerDomain {
    AllIntegers,
    Naturals,
    ZeroOne,
}

/// The nine generators, declared in canonical left-to-right order:
/// forms, then functions, then operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Dx,
    Dth,
    X,
    Th,
    D,
    Px,
    Pth,
    Ix,
    Ith,
}

pub const GENERATORS: [Generator; 9] = [
    Generator::Dx,
    Generator::Dth,
    Generator::X,
    Generator::Th,
    Generator::D,
    Generator::Px,
    Generator::Pth,
    Generator::Ix,
    Generator::Ith,
];

impl Generator {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Generator {
        GENERATORS[i]
    }

    pub fn parity(self) -> Parity {
        use Generator::*;
        match self {
            X | Dth | Px | Ith => Parity::Even,
            Th | Dx | D | Pth | Ix => Parity::Odd,
        }
    }

    pub fn power_domain(self) -> PowerDomain {
        use Generator::*;
        match self {
            X => PowerDomain::AllIntegers,
            Dth | Px | Ith => PowerDomain::Naturals,
            Th | Dx | D | Pth | Ix => PowerDomain::ZeroOne,
        }
    }

    /// Textual symbol used by the expression language.
    pub fn symbol(self) -> &'static str {
        use Generator::*;
        match self {
            Dx => "dx",
            Dth => "dth",
            X => "x",
            Th => "th",
            D => "d",
            Px => "px",
            Pth => "pth",
            Ix => "ix",
            Ith => "ith",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Generator> {
        GENERATORS.iter().copied().find(|g| g.symbol() == s)
    }

    /// Operator-sector generators, killed by the vacuum projection.
    pub fn is_operator(self) -> bool {
        self.index() >= Generator::D.index()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A single letter of a word: a generator, or `x^-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Gen(Generator),
    XInv,
}

impl Letter {
    pub const X: Letter = Letter::Gen(Generator::X);

    pub fn generator(self) -> Generator {
        match self {
            Letter::Gen(g) => g,
            Letter::XInv => Generator::X,
        }
    }

    /// Exponent contributed to the generator's slot.
    pub fn step(self) -> i32 {
        match self {
            Letter::XInv => -1,
            Letter::Gen(_) => 1,
        }
    }

    pub fn parity(self) -> Parity {
        self.generator().parity()
    }

    /// Every letter, in canonical order with `x^-1` next to `x`.
    pub fn all() -> Vec<Letter> {
        let mut out = Vec::with_capacity(10);
        for g in GENERATORS {
            out.push(Letter::Gen(g));
            if g == Generator::X {
                out.push(Letter::XInv);
            }
        }
        out
    }
}

impl From<Generator> for Letter {
    fn from(g: Generator) -> Letter {
        Letter::Gen(g)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Gen(g) => write!(f, "{g}"),
            Letter::XInv => f.write_str("x^-1"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nilpotent_generators_are_the_odd_ones() {
        for g in GENERATORS {
            let zero_one = g.power_domain() == PowerDomain::ZeroOne;
            assert_eq!(zero_one, g.parity() == Parity::Odd, "{g}");
        }
    }

    #[test]
    fn symbols_round_trip() {
        for g in GENERATORS {
            assert_eq!(Generator::from_symbol(g.symbol()), Some(g));
        }
    }
}
