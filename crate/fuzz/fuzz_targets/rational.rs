#![no_main]

use libfuzzer_sys::fuzz_target;
use unitrace::rational::{format_rational, parse_rational};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(x) = parse_rational(s) {
        let again = parse_rational(&format_rational(&x)).expect("formatted value parses");
        assert_eq!(again, x);
    }
});
