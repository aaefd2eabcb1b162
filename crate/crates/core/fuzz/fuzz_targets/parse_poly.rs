#![no_main]

use libfuzzer_sys::fuzz_target;
use pddo::json::{parse_poly, print_poly};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_poly(s, None) {
        let text = print_poly(&p);
        assert_eq!(parse_poly(&text, Some(p.n_vars())).expect("printed poly parses"), p);
    }
});
