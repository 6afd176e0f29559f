; the second run cannot always dodge: some run has no matching run with a larger sum
(spec (forall 1) (exists 1)
  (pre (and (= a@1 a@2) (= b@1 b@2)))
  (observe 1 (not (< a b)))
  (observe 2 (not (< a b)))
  (global (< c@1 c@2)))
