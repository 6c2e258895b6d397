#![no_main]

use libfuzzer_sys::fuzz_target;
use unitrace::symfunc::PowerSumElement;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(f) = PowerSumElement::from_json(s) {
        let again = PowerSumElement::from_json(&f.to_json()).expect("serialized element parses");
        assert_eq!(again, f);
        let _ = f.homogeneous_degree();
    }
});
