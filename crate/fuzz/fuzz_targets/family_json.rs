#![no_main]

use libfuzzer_sys::fuzz_target;
use unitrace::traces::FamilyOfDiagrams;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(f) = FamilyOfDiagrams::from_json(s) {
        let again = FamilyOfDiagrams::from_json(&f.to_json()).expect("serialized family parses");
        assert_eq!(again, f);
        let _ = f.canonical();
    }
});
