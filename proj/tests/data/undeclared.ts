a: b
b: missing
