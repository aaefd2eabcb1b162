#![no_main]

use libfuzzer_sys::fuzz_target;
use pddo::json::parse_descriptor;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(d) = parse_descriptor(s) {
            // building may reject the parameters but must not panic
            let _ = d.build();
        }
    }
});
