use std::fmt;

use ga_core::BladeIndex;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    /// Geometric product.
    Mul,
    /// Right multiplication by the inverse.
    Div,
    Wedge,
    Inner,
}

impl BinOp {
    pub fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
            BinOp::Wedge => '^',
            BinOp::Inner => '.',
        }
    }
}

macro_rules! functions {
    ($($variant:ident => $name:literal / $arity:literal : $help:literal,)*) => {
        /// Built-in functions callable from expressions.
        #[derive(Debug, Clone, Copy, PartialEq, Eq)]
        pub enum Func {
            $($variant,)*
        }

        impl Func {
            pub const ALL: &'static [Func] = &[$(Func::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Func::$variant => $name,)*
                }
            }

            pub fn arity(self) -> usize {
                match self {
                    $(Func::$variant => $arity,)*
                }
            }

            pub fn help(self) -> &'static str {
                match self {
                    $(Func::$variant => $help,)*
                }
            }

            pub fn lookup(name: &str) -> Option<Func> {
                match name {
                    $($name => Some(Func::$variant),)*
                    _ => None,
                }
            }
        }
    };
}

functions! {
    Exp => "exp" / 1 : "exp(B): exponential of a blade bivector",
    Rev => "rev" / 1 : "rev(A): reverse",
    Inv => "inv" / 1 : "inv(A): inverse",
    Grade => "grade" / 2 : "grade(A, k): grade-k part",
    Norm => "norm" / 1 : "norm(A): magnitude sqrt|<A rev(A)>|",
    Dual => "dual" / 1 : "dual(A): I*A in G(3,0)",
    Cross => "cross" / 2 : "cross(a, b): cross product in G(3,0)",
    Proj => "proj" / 2 : "proj(x, a): projection of x onto a",
    Rej => "rej" / 2 : "rej(x, a): rejection of x from a",
    Reflect => "reflect" / 2 : "reflect(x, B): reflection in the plane of unit bivector B",
    ReflectN => "reflectn" / 2 : "reflectn(x, n): reflection in the plane with unit normal n",
    Rot => "rot" / 2 : "rot(x, R): rotation R x rev(R)",
    Rotor => "rotor" / 2 : "rotor(a, b): rotor turning a toward b",
    Rotor2 => "rotor2" / 2 : "rotor2(n1, n2): rotor of two reflections, n1 first",
    Stereo => "stereo" / 1 : "stereo(a): project a unit vector onto the plane",
    Unstereo => "unstereo" / 1 : "unstereo(x): lift a plane point back to the sphere",
    ProbP => "probp" / 2 : "probp(a, b): probability (1 + a.b)/2",
    ProbM => "probm" / 2 : "probm(a, b): probability (1 - a.b)/2",
    Dist => "dist" / 3 : "dist(x0, a, p): distance from p to the line x0 + t a",
    Line => "line" / 3 : "line(x0, a, x): 1 if x lies on the line x0 + t a, else 0",
    Plane => "plane" / 3 : "plane(x0, B, x): 1 if x lies on the plane through x0 spanned by B, else 0",
    Area => "area" / 2 : "area(a, b): area of the triangle with sides a and b",
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Number(f64),
    Blade(BladeIndex),
    Var(String),
    Neg(Box<Expr>),
    Reverse(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Vec<Expr>),
}

impl Expr {
    pub fn binary(op: BinOp, lhs: Expr, rhs: Expr) -> Expr {
        Expr::Binary(op, Box::new(lhs), Box::new(rhs))
    }

    pub fn var(name: &str) -> Expr {
        Expr::Var(name.to_string())
    }
}

/// Fully parenthesized form, so that the shape of the tree is visible.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Number(x) => write!(f, "{x}"),
            Expr::Blade(b) => write!(f, "{b}"),
            Expr::Var(name) => f.write_str(name),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Reverse(e) => write!(f, "({e}~)"),
            Expr::Binary(op, l, r) => write!(f, "({l} {} {r})", op.symbol()),
            Expr::Call(func, args) => {
                write!(f, "{}(", func.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Statement {
    Let(String, Expr),
    /// `assert lhs ~ rhs [tol]`
    Assert {
        lhs: Expr,
        rhs: Expr,
        tol: Option<f64>,
    },
    Expr(Expr),
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Let(name, e) => write!(f, "let {name} = {e}"),
            Statement::Assert { lhs, rhs, tol } => {
                write!(f, "assert {lhs} ~ {rhs}")?;
                if let Some(t) = tol {
                    write!(f, " {t:e}")?;
                }
                Ok(())
            }
            Statement::Expr(e) => write!(f, "{e}"),
        }
    }
}
