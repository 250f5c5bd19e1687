#![no_main]

use libfuzzer_sys::fuzz_target;
use qgor_core::{MonomialOrder, PolyRing, PrimeField, Rationals};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let q = PolyRing::with_vars(Rationals, &["x", "y", "z", "X1"], MonomialOrder::Grevlex);
    let p = PolyRing::with_vars(PrimeField::new(32003).unwrap(), &["x", "y", "z", "X1"], MonomialOrder::Lex);
    if let Ok(f) = q.parse(text) {
        // printing and reparsing is the identity
        assert_eq!(q.parse(&q.format(&f)).unwrap(), f);
    }
    if let Ok(f) = p.parse(text) {
        assert_eq!(p.parse(&p.format(&f)).unwrap(), f);
    }
});
