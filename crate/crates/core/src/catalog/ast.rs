use num_rational::BigRational;

use crate::cyclotomic::lcm;

/// Formal variable. `Q` is the univariate variable of the `a = b = q` specialization and
/// evaluates in the `a` slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    A,
    B,
    Q,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::A => "a",
            Var::B => "b",
            Var::Q => "q",
        }
    }
}

/// Parse tree of the identity language.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Power(Box<Expr>, i64),
    Theta(Box<Expr>, Box<Expr>),
    Var(Var),
    /// `zeta_order^exponent`
    Root { order: u64, exponent: i64 },
    Rational(BigRational),
    Negate(Box<Expr>),
    RealPart(Box<Expr>),
    ImagPart(Box<Expr>),
    SpecializeQ(Box<Expr>),
}

impl Expr {
    pub fn int(n: i64) -> Self {
        Expr::Rational(BigRational::from_integer(n.into()))
    }

    pub fn theta(x: Expr, y: Expr) -> Self {
        Expr::Theta(Box::new(x), Box::new(y))
    }

    pub fn power(base: Expr, e: i64) -> Self {
        Expr::Power(Box::new(base), e)
    }

    pub fn negate(x: Expr) -> Self {
        Expr::Negate(Box::new(x))
    }

    /// `a^p * b^q` with unit exponents and zero exponents simplified away.
    pub fn monomial(p: i64, q: i64) -> Self {
        let part = |v: Var, e: i64| match e {
            0 => None,
            1 => Some(Expr::Var(v)),
            _ => Some(Expr::power(Expr::Var(v), e)),
        };
        let mut parts: Vec<Expr> = [part(Var::A, p), part(Var::B, q)].into_iter().flatten().collect();
        match parts.len() {
            0 => Expr::int(1),
            1 => parts.pop().unwrap(),
            _ => Expr::Product(parts),
        }
    }

    fn children(&self) -> Vec<&Expr> {
        match self {
            Expr::Sum(xs) | Expr::Product(xs) => xs.iter().collect(),
            Expr::Theta(x, y) => vec![x, y],
            Expr::Power(x, _)
            | Expr::Negate(x)
            | Expr::RealPart(x)
            | Expr::ImagPart(x)
            | Expr::SpecializeQ(x) => vec![x],
            Expr::Var(_) | Expr::Root { .. } | Expr::Rational(_) => Vec::new(),
        }
    }

    /// lcm of every root-of-unity order appearing in the tree (1 if none).
    pub fn root_order(&self) -> u64 {
        let own = match self {
            Expr::Root { order, .. } => *order,
            _ => 1,
        };
        self.children()
            .into_iter()
            .fold(own, |acc, c| lcm(acc, c.root_order()))
    }

    pub fn contains_theta(&self) -> bool {
        matches!(self, Expr::Theta(..)) || self.children().into_iter().any(Expr::contains_theta)
    }
}
