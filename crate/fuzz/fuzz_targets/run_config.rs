#![no_main]

use libfuzzer_sys::fuzz_target;
use unitrace_cli::RunConfig;

// Only decoding and validation run here; dispatch can be arbitrarily slow.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(cfg) = RunConfig::from_json(s) {
        let again = RunConfig::from_json(&cfg.to_json()).expect("serialized config parses");
        assert_eq!(again, cfg);
        let _ = cfg.validate();
    }
});
