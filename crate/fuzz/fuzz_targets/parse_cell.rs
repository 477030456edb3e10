#![no_main]

use libfuzzer_sys::fuzz_target;
use orientalis::cells::{parse, parse_in, print, print_unicode};
use orientalis::oriental::{oriental, oriental_context};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(e) = parse(text) {
        assert_eq!(parse(&print(&e)).unwrap(), e);
        assert_eq!(parse(&print_unicode(&e)).unwrap(), e);
    }
    if let Ok(e) = parse_in(text, &oriental(3)) {
        let _ = oriental_context(3).eval(&e);
    }
});
