; while (a < b) { c = c + a*a; a = a + 1; }
(system
  (vars (a Int) (b Int) (c Int))
  (init (and (> a 0) (> b a) (= c 0)))
  (tr (and (< a b) (= c' (+ c (* a a))) (= a' (+ a 1)) (= b' b))))
