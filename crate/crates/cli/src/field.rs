//! Runtime dispatch from a field tag to a concrete scalar type.

use centrex::{Error, FieldTag, Result};

/// Primes with a compiled-in `Fp` instantiation.
pub const PRIMES: [u64; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

/// Parses `Q`, `F5`, `F_5` or `5`.
pub fn parse_field(arg: &str) -> Result<FieldTag> {
    let t = arg.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(FieldTag::Rational);
    }
    let digits = t.trim_start_matches(['F', 'f']).trim_start_matches('_');
    digits
        .parse::<u64>()
        .map(FieldTag::Fp)
        .map_err(|_| Error::Format(format!("unknown field {arg:?}")))
}

pub fn unsupported(tag: FieldTag) -> Error {
    let primes: Vec<String> = PRIMES.iter().map(u64::to_string).collect();
    Error::UnsupportedField(format!(
        "{tag}: supported fields are Q and F_p for p in {{{}}}",
        primes.join(",")
    ))
}

/// Calls `$f::<S>(args…)` with `S` the scalar type named by `$tag`.
macro_rules! with_field {
    ($tag:expr, $f:ident($($arg:expr),* $(,)?)) => {{
        use centrex::{FieldTag, Fp, Rational};
        match $tag {
            FieldTag::Rational => $f::<Rational>($($arg),*),
            FieldTag::Fp(2) => $f::<Fp<2>>($($arg),*),
            FieldTag::Fp(3) => $f::<Fp<3>>($($arg),*),
            FieldTag::Fp(5) => $f::<Fp<5>>($($arg),*),
            FieldTag::Fp(7) => $f::<Fp<7>>($($arg),*),
            FieldTag::Fp(11) => $f::<Fp<11>>($($arg),*),
            FieldTag::Fp(13) => $f::<Fp<13>>($($arg),*),
            FieldTag::Fp(17) => $f::<Fp<17>>($($arg),*),
            FieldTag::Fp(19) => $f::<Fp<19>>($($arg),*),
            FieldTag::Fp(23) => $f::<Fp<23>>($($arg),*),
            FieldTag::Fp(29) => $f::<Fp<29>>($($arg),*),
            FieldTag::Fp(31) => $f::<Fp<31>>($($arg),*),
            FieldTag::Fp(37) => $f::<Fp<37>>($($arg),*),
            FieldTag::Fp(41) => $f::<Fp<41>>($($arg),*),
            FieldTag::Fp(43) => $f::<Fp<43>>($($arg),*),
            FieldTag::Fp(47) => $f::<Fp<47>>($($arg),*),
            other => Err($crate::field::unsupported(other)),
        }
    }};
}
pub(crate) use with_field;
