a: b
b: a
c: d
d: e
e:
