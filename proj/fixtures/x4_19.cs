# the unique irretractable size-4 cycle set whose diagonal is a 4-cycle
4
1 0 2 3
3 2 0 1
0 1 3 2
2 3 1 0
