use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::String;
use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Constant {
    /// `1`, unit of tensor.
    One,
    /// `bot`, unit of par.
    Bottom,
    /// `top`, unit of with.
    Top,
    /// `0`, unit of plus.
    Zero,
}

/// Multiplicative-additive linear-logic formula.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(String),
    Const(Constant),
    Dual(Box<Formula>),
    Tensor(Box<Formula>, Box<Formula>),
    Par(Box<Formula>, Box<Formula>),
    Lollipop(Box<Formula>, Box<Formula>),
    With(Box<Formula>, Box<Formula>),
    Plus(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: &str) -> Self {
        Formula::Atom(String::from(name))
    }

    pub fn dual(a: Formula) -> Self {
        Formula::Dual(Box::new(a))
    }

    pub fn tensor(a: Formula, b: Formula) -> Self {
        Formula::Tensor(Box::new(a), Box::new(b))
    }

    pub fn par(a: Formula, b: Formula) -> Self {
        Formula::Par(Box::new(a), Box::new(b))
    }

    pub fn lollipop(a: Formula, b: Formula) -> Self {
        Formula::Lollipop(Box::new(a), Box::new(b))
    }

    pub fn with(a: Formula, b: Formula) -> Self {
        Formula::With(Box::new(a), Box::new(b))
    }

    pub fn plus(a: Formula, b: Formula) -> Self {
        Formula::Plus(Box::new(a), Box::new(b))
    }

    /// Atom names in sorted order.
    pub fn atoms(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Formula::Atom(name) => {
                out.insert(name.as_str());
            }
            Formula::Const(_) => {}
            Formula::Dual(a) => a.collect_atoms(out),
            Formula::Tensor(a, b)
            | Formula::Par(a, b)
            | Formula::Lollipop(a, b)
            | Formula::With(a, b)
            | Formula::Plus(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    // 0: -o, 1: & (+), 2: * @, 3: postfix ^, 4: primary
    fn level(&self) -> u8 {
        match self {
            Formula::Lollipop(..) => 0,
            Formula::With(..) | Formula::Plus(..) => 1,
            Formula::Tensor(..) | Formula::Par(..) => 2,
            Formula::Dual(_) => 3,
            Formula::Atom(_) | Formula::Const(_) => 4,
        }
    }

    fn fmt_at(&self, min_level: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.level() < min_level {
            f.write_str("(")?;
            self.fmt_at(0, f)?;
            return f.write_str(")");
        }
        let infix = |f: &mut fmt::Formatter<'_>, a: &Formula, op: &str, b: &Formula, lvl: u8| {
            a.fmt_at(lvl, f)?;
            write!(f, " {op} ")?;
            b.fmt_at(lvl + 1, f)
        };
        match self {
            Formula::Atom(name) => f.write_str(name),
            Formula::Const(c) => f.write_str(match c {
                Constant::One => "1",
                Constant::Bottom => "bot",
                Constant::Top => "top",
                Constant::Zero => "0",
            }),
            Formula::Dual(a) => {
                a.fmt_at(3, f)?;
                f.write_str("^")
            }
            Formula::Tensor(a, b) => infix(f, a, "*", b, 2),
            Formula::Par(a, b) => infix(f, a, "@", b, 2),
            Formula::With(a, b) => infix(f, a, "&", b, 1),
            Formula::Plus(a, b) => infix(f, a, "(+)", b, 1),
            Formula::Lollipop(a, b) => {
                a.fmt_at(1, f)?;
                f.write_str(" -o ")?;
                b.fmt_at(0, f)
            }
        }
    }
}

/// Prints with the fewest parentheses the grammar needs; the output parses
/// back to the same tree.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(0, f)
    }
}
