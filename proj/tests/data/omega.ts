q: q
root q
