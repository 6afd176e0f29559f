; while (a < b) { if (*) c = c + a*a; a = a + 1; }   label 1 adds, 0 skips
(system
  (vars (a Int) (b Int) (c Int))
  (label (l Int) (domain 0 1))
  (init (and (> a 0) (> b a) (= c 0)))
  (tr (and (< a b) (= a' (+ a 1)) (= b' b)
           (ite (= l 1) (= c' (+ c (* a a))) (= c' c)))))
