//! Presentations attached to classified groups.

use crate::grouptheory::Presentation;

fn parse(text: String) -> Presentation {
    Presentation::parse(&text).unwrap_or_else(|e| panic!("built-in presentation {text}: {e}"))
}

pub(crate) fn cyclic(m: u64) -> Presentation {
    parse(format!("<a | a^{m}>"))
}

pub(crate) fn abelian(d: u64, n: u64) -> Presentation {
    parse(format!("<a,b | a^{d}, b^{n}, [a,b]>"))
}

/// Central Z_2 by D_{2n}; `n` is the cover degree.
pub(crate) fn accola(n: u64) -> Presentation {
    parse(format!("<u,v | u^4, v^{n}, (u*v)^2, [u^2,v]>"))
}

/// `n` is the cover degree (divisible by 8).
pub(crate) fn kulkarni(n: u64) -> Presentation {
    let e = n / 2 - 1;
    parse(format!("<u,v | u^4, v^{n}, (u*v)^2, u^2*v*u^2*v^{e}>"))
}

pub(crate) fn twisted_c2(n: u64, b: u64) -> Presentation {
    parse(format!("<u,v | u^2, v^{n}, u*v*u = v^{b}>"))
}

pub(crate) fn period_three(n: u64, k: u64) -> Presentation {
    parse(format!("<S,T | S^3, T^{n}, S*T*S^-1 = T^{k}>"))
}

/// Central Z_d extension of D_{2n}.
pub(crate) fn fermat_dihedral(d: u64, n: u64) -> Presentation {
    parse(format!("<s,t,u | s^{d}, t^{n}, u^2, [s,t], [s,u], (u*t)^2 = s^-1>"))
}

/// `(Z_e + Z_n) x| Z_2` with the involution swapping two generators.
pub(crate) fn fermat_swap(n: u64, e: u64) -> Presentation {
    parse(format!("<a,b,u | a^{n}, b^{n}, (a*b)^{e}, [a,b], u^2, u*a*u = b, u*b*u = a>"))
}

/// Central Z_4 by A_4.
pub(crate) fn central_a4() -> Presentation {
    parse("<u1,u2 | u1^2, u2^3, [u1,(u1*u2)^3]>".to_string())
}
