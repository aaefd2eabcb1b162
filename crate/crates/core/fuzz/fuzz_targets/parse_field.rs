#![no_main]

use libfuzzer_sys::fuzz_target;
use pddo::FieldElement;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(x) = s.parse::<FieldElement>() {
            // printing must round-trip
            let again: FieldElement = x.to_string().parse().expect("printed element parses");
            assert_eq!(again, x);
        }
    }
});
