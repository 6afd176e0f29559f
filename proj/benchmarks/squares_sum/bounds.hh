; largest reachable c is 1 + 4 + 9 = 14, so nothing is cut
(bounds (a 1 4) (b 1 4) (c 0 30))
