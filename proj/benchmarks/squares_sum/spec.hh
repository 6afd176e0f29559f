; two runs, the second on a strictly smaller interval; compare sums at exit
(spec (forall 2)
  (pre (and (< a@1 a@2) (> b@1 b@2)))
  (observe 1 (not (< a b)))
  (observe 2 (not (< a b)))
  (global (> c@1 c@2)))
