# infinite spine with an infinite path below every node
c: w c
w: w
root c
