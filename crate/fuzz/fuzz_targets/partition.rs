#![no_main]

use libfuzzer_sys::fuzz_target;
use unitrace::Partition;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = s.parse::<Partition>() {
        let again: Partition = p.to_string().parse().expect("display output parses");
        assert_eq!(again, p);
        assert_eq!(p.transpose().transpose(), p);
    }
});
