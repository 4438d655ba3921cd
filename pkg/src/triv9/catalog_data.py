"""Built-in orbit records: nilpotent parts of the mixed classification,
one table per semisimple family, in the line-oriented record grammar.

Each line: orbit <family> <row> [<variant>] : <trivector> ; centralizer=<type>
The trivector is the nilpotent part; the semisimple part is the family
representative at the verification parameters.  centralizer=0 means the
trivial algebra.
"""

BUILTIN_RECORDS = """
# family 2_1
orbit 2_1 1 : e168+e249 ; centralizer=0
orbit 2_1 2 : e168 ; centralizer=t
orbit 2_1 3 : 0 ; centralizer=2*t

# family 2_2
orbit 2_2 1 : e235+1/2*e279-1/2*e369-e567 ; centralizer=0
orbit 2_2 2 a : -e148 ; centralizer=u
orbit 2_2 2 b : e148 ; centralizer=u
orbit 2_2 3 : 0 ; centralizer=t+u

# family 3_1
orbit 3_1 1 : e159+e168+e249+e267 ; centralizer=0
orbit 3_1 2 : e159+e168+e249 ; centralizer=t
orbit 3_1 3 : e159+e168+e267 ; centralizer=t
orbit 3_1 4 : e159+e168 ; centralizer=2*t
orbit 3_1 5 : e159+e267 ; centralizer=2*t
orbit 3_1 6 : e168+e249 ; centralizer=2*t
orbit 3_1 7 : e159 ; centralizer=3*t
orbit 3_1 8 : e168 ; centralizer=3*t
orbit 3_1 9 : 0 ; centralizer=4*t

# family 3_2
orbit 3_2 1 : e235+e238+1/2*e247+1/2*e279+1/2*e346-1/2*e369-e567+e678 ; centralizer=0
orbit 3_2 2 a : e159+e235+1/2*e279-1/2*e369-e567 ; centralizer=u
orbit 3_2 2 b : -e159-e235-1/2*e279+1/2*e369+e567 ; centralizer=u
orbit 3_2 3 a : -e148+1/2*e234+e278+e368+1/2*e467 ; centralizer=u
orbit 3_2 3 b : e148-1/2*e234-e278-e368-1/2*e467 ; centralizer=u
orbit 3_2 4 a : -e148+e159 ; centralizer=2*u
orbit 3_2 4 b : -e148-e159 ; centralizer=2*u
orbit 3_2 4 c : e148+e159 ; centralizer=2*u
orbit 3_2 4 d : e148-e159 ; centralizer=2*u
orbit 3_2 5 : 1/2*e234+e278+e368+1/2*e467 ; centralizer=t+u
orbit 3_2 6 : e235+1/2*e279-1/2*e369-e567 ; centralizer=t+u
orbit 3_2 7 a : -e159 ; centralizer=t+2*u
orbit 3_2 7 b : e159 ; centralizer=t+2*u
orbit 3_2 8 a : -e148 ; centralizer=t+2*u
orbit 3_2 8 b : e148 ; centralizer=t+2*u
orbit 3_2 9 : 0 ; centralizer=2*t+2*u

# family 3_3
orbit 3_3 1 : e159-2*e249-2*e348+2*e357 ; centralizer=0
orbit 3_3 4 : e159+2*e357 ; centralizer=t+u
orbit 3_3 9 : 0 ; centralizer=2*t+2*u

# family 3_4
orbit 3_4 1 : e123-2*e179-2*e259-2*e267-1/2*e349+e357 ; centralizer=0
orbit 3_4 2 : e123-2*e179-2*e259-1/2*e349+e357 ; centralizer=t
orbit 3_4 3 a : -2*e267-1/2*e349+1/4*e468 ; centralizer=u
orbit 3_4 3 b : 2*e267-1/2*e349-1/4*e468 ; centralizer=u
orbit 3_4 4 a : -2*e349+e468 ; centralizer=t+u
orbit 3_4 4 b : -2*e349-e468 ; centralizer=t+u
orbit 3_4 5 : -2*e267-1/2*e349 ; centralizer=t+u
orbit 3_4 6 : e123-2*e179-2*e259+e357 ; centralizer=2*t
orbit 3_4 7 : e349 ; centralizer=2*t+u
orbit 3_4 8 a : e468 ; centralizer=2*t+u
orbit 3_4 8 b : -e468 ; centralizer=2*t+u
orbit 3_4 9 : 0 ; centralizer=3*t+u

# family 4_1
orbit 4_1 1 : e149+e167+e258+e347 ; centralizer=0
orbit 4_1 2 : e149+e158+e167+e248+e257+e347 ; centralizer=0
orbit 4_1 3 a : e147+e258 ; centralizer=0
orbit 4_1 3 b : e147-e158-e248-e257 ; centralizer=0
orbit 4_1 4 : e148+e157+e247 ; centralizer=t
orbit 4_1 5 : e147 ; centralizer=sl2R
orbit 4_1 6 : 0 ; centralizer=sl3R

# family 5_1
orbit 5_1 1 : e123+e149+e167+e258+e347+e456 ; centralizer=0
orbit 5_1 2 : e123+e149+e158+e167+e248+e257+e347+e456 ; centralizer=0
orbit 5_1 3 : e123+e149+e167+e258+e347 ; centralizer=t
orbit 5_1 4 a : e123+e147+e258+e456 ; centralizer=0
orbit 5_1 4 b : e123-2*e148-2*e157-2*e247+2*e258+e456 ; centralizer=0
orbit 5_1 5 : e123+e149+e158+e167+e248+e257+e347 ; centralizer=t
orbit 5_1 6 : e149+e167+e258+e347 ; centralizer=2*t
orbit 5_1 7 : e123+e148+e157+e247+e456 ; centralizer=t
orbit 5_1 8 a : e123+e147+e258 ; centralizer=t
orbit 5_1 8 b : e123-2*e148-2*e157-2*e247+2*e258 ; centralizer=t
orbit 5_1 9 : e149+e158+e167+e248+e257+e347 ; centralizer=2*t
orbit 5_1 10 : e123+e148+e157+e247 ; centralizer=2*t
orbit 5_1 11 a : e147+e258 ; centralizer=t
orbit 5_1 11 b : e147-e158-e248-e257 ; centralizer=t
orbit 5_1 12 : e123+e147+e456 ; centralizer=sl2R
orbit 5_1 13 : e148+e157+e247 ; centralizer=3*t
orbit 5_1 14 : e123+e147 ; centralizer=sl2R+t
orbit 5_1 15 : e147 ; centralizer=sl2R+2*t
orbit 5_1 16 : e123+e456 ; centralizer=sl3R
orbit 5_1 17 : e123 ; centralizer=sl3R+t
orbit 5_1 18 : 0 ; centralizer=sl3R+2*t

# family 5_2
orbit 5_2 1 : 2*e138+e139+e147+2*e157+2*e237+e345-e389-e468+1/2*e469+1/2*e479+2*e568-e569-2*e578 ; centralizer=0
orbit 5_2 2 : -1/2*e134+e135-e178+1/2*e179-1/4*e248+1/8*e249+1/2*e258-1/4*e259+e345+e367-e389+1/2*e456+1/2*e479-2*e578+1/2*e689 ; centralizer=0
orbit 5_2 3 a : -1/2*e126+e134-2*e135+2*e178-e179-e248-1/2*e249-2*e258-e259-2*e367 ; centralizer=u
orbit 5_2 3 b : 1/2*e126+e134-2*e135+2*e178-e179-e248-1/2*e249-2*e258-e259-2*e367 ; centralizer=u
orbit 5_2 4 a : 1/2*e245+1/2*e289+e345-e389+1/4*e469+1/2*e479+e568-2*e578 ; centralizer=0
orbit 5_2 4 b : 1/8*e248+1/16*e249+1/4*e258+1/8*e259+e345-e389-e468+1/2*e469+1/2*e479+2*e568-e569-2*e578 ; centralizer=0
orbit 5_2 5 a : -1/2*e126+2*e138+e139+e147+1/4*e148-1/8*e149+2*e157-1/2*e158+1/4*e159+2*e237+1/4*e346-1/2*e356+1/2*e678-1/4*e679 ; centralizer=u
orbit 5_2 5 b : 1/2*e126+2*e138+e139+e147+1/4*e148-1/8*e149+2*e157-1/2*e158+1/4*e159+2*e237+1/4*e346-1/2*e356+1/2*e678-1/4*e679 ; centralizer=u
orbit 5_2 6 : 2*e138+e139+e147+2*e157+2*e237-e468+1/2*e469+2*e568-e569 ; centralizer=t+u
orbit 5_2 7 : e134-2*e135+2*e178-e179+e345-2*e367-e389+1/2*e479-2*e578 ; centralizer=t
orbit 5_2 8 a : -1/2*e126-1/4*e249-e258-1/2*e456-1/2*e689 ; centralizer=u
orbit 5_2 8 b : -1/2*e126+1/4*e137+e468-1/2*e469-2*e568+e569 ; centralizer=u
orbit 5_2 8 c : 1/2*e126-1/4*e249-e258-1/2*e456-1/2*e689 ; centralizer=u
orbit 5_2 8 d : 1/2*e126+1/4*e137+e468-1/2*e469-2*e568+e569 ; centralizer=u
orbit 5_2 9 : 2*e138+e139+e147+1/4*e148-1/8*e149+2*e157-1/2*e158+1/4*e159+2*e237+1/4*e346-1/2*e356+1/2*e678-1/4*e679 ; centralizer=t+u
orbit 5_2 10 : -1/2*e126+2*e138+e139+e147+2*e157+2*e237 ; centralizer=t+u
orbit 5_2 11 a : 1/2*e245+1/2*e289+1/4*e469+e568 ; centralizer=t+u
orbit 5_2 11 b : e248+1/2*e249+2*e258+e259+1/8*e468-1/16*e469-1/4*e568+1/8*e569 ; centralizer=t+u
orbit 5_2 12 : e345-e389-e468+1/2*e469+1/2*e479+2*e568-e569-2*e578 ; centralizer=sl2R
orbit 5_2 13 : e134-2*e135+2*e178-e179-2*e367 ; centralizer=2*t+u
orbit 5_2 14 a : -1/2*e126-2*e137 ; centralizer=sl2R+u
orbit 5_2 14 b : 1/2*e126-2*e137 ; centralizer=sl2R+u
orbit 5_2 15 : -e468+1/2*e469+2*e568-e569 ; centralizer=sl2R+t+u
orbit 5_2 16 : e345-e389+1/2*e479-2*e578 ; centralizer=sl3R
orbit 5_2 17 a : -e126 ; centralizer=sl3R+u
orbit 5_2 17 b : e126 ; centralizer=sl3R+u
orbit 5_2 18 : 0 ; centralizer=sl3R+t+u

# family 6_1
orbit 6_1 1 : e159+e168+e249+e258+e267+e347 ; centralizer=0
orbit 6_1 2 : e159+e168+e249+e257+e258+e347 ; centralizer=0
orbit 6_1 3 a : e149+e158+e167+e248+e259+e347 ; centralizer=0
orbit 6_1 3 b : -e148-e159-e249+e258-e267-e357 ; centralizer=0
orbit 6_1 4 : e149+e158+e248+e257+e367 ; centralizer=t
orbit 6_1 5 : e149+e167+e168+e257+e348 ; centralizer=t
orbit 6_1 6 : e149+e158+e248+e267+e357 ; centralizer=t
orbit 6_1 7 : e149+e158+e167+e248+e357 ; centralizer=t
orbit 6_1 8 : e149+e167+e258+e347 ; centralizer=2*t
orbit 6_1 9 a : e147+e158+e258+e269 ; centralizer=2*t
orbit 6_1 9 b : 2*e147-e159+e168-e249-2*e257 ; centralizer=t+u
orbit 6_1 10 : e149+e158+e167+e248+e257+e347 ; centralizer=0
orbit 6_1 11 : e149+e167+e248+e357 ; centralizer=2*t
orbit 6_1 12 : e149+e167+e247+e258 ; centralizer=2*t
orbit 6_1 13 : e149+e158+e167+e248+e257 ; centralizer=t
orbit 6_1 14 : e149+e157+e168+e247+e348 ; centralizer=sl2R
orbit 6_1 15 : e158+e169+e247 ; centralizer=sl2R+2*t
orbit 6_1 16 : e149+e158+e167+e247 ; centralizer=2*t
orbit 6_1 17 : e148+e157+e249+e267 ; centralizer=sl2R+t
orbit 6_1 18 : e147+e158+e248+e259 ; centralizer=sl2R+t
orbit 6_1 19 : e149+e157+e248 ; centralizer=3*t
orbit 6_1 20 a : e147+e258 ; centralizer=4*t
orbit 6_1 20 b : 2*e147-2*e158-2*e248-2*e257 ; centralizer=2*t+2*u
orbit 6_1 21 : e148+e157+e247 ; centralizer=3*t
orbit 6_1 22 : e147+e158+e169 ; centralizer=sl2R+sl3R
orbit 6_1 23 : e147+e158 ; centralizer=2*sl2R+2*t
orbit 6_1 24 : e147 ; centralizer=3*sl2R+2*t
orbit 6_1 25 : 0 ; centralizer=3*sl3R

# family 6_2
orbit 6_2 1 : e139-e148+2*e157+e245+e289+2*e367 ; centralizer=0
orbit 6_2 2 : -2*e135-e179+1/2*e234+e278+e368+1/2*e467-e569 ; centralizer=0
orbit 6_2 3 a : -2*e135-e145-e179-e189+1/2*e234+e278+e368+1/2*e467 ; centralizer=0
orbit 6_2 3 b : e145+e189-2*e237-e248+e346+2*e678 ; centralizer=0
orbit 6_2 4 a : e159+2*e237-e248-1/4*e249-e258-1/2*e456-1/2*e689 ; centralizer=u
orbit 6_2 4 b : -4*e159+1/32*e237-1/2*e238-1/8*e239-1/4*e247+20*e248+5*e249-1/4*e257+20*e258+4*e259-1/4*e356+2*e456-1/8*e679+2*e689 ; centralizer=u
orbit 6_2 5 a : e159-1/2*e239-e248-e257+e356+1/2*e679 ; centralizer=u
orbit 6_2 5 b : -e159-1/2*e239-e248-e257+e356+1/2*e679 ; centralizer=u
orbit 6_2 6 : -e134-2*e178+2*e235+e279-e569 ; centralizer=t
orbit 6_2 7 a : e139-e148+2*e157+e238+1/2*e247+1/2*e346+e678 ; centralizer=u
orbit 6_2 7 b : -4*e135-1/4*e148-2*e179-1/2*e238-1/4*e247+1/4*e346+1/2*e678 ; centralizer=u
orbit 6_2 8 : -e145-e189+2*e237+e468 ; centralizer=t+u
orbit 6_2 9 a : e235+1/2*e279-1/2*e369+e468-e567 ; centralizer=t+u
orbit 6_2 9 b : 1/2*e237+e248+e259+1/2*e469+2*e568 ; centralizer=2*u
orbit 6_2 9 c : 1/2*e237-e248-e259+1/2*e469+2*e568 ; centralizer=2*u
orbit 6_2 10 : e159+2*e237-1/2*e239-1/2*e249-e257-2*e258-e356-1/2*e679 ; centralizer=0
orbit 6_2 11 : -2*e135-e179+1/2*e245+1/2*e289-1/4*e469-e568 ; centralizer=t+u
orbit 6_2 12 a : -2*e135-e179+e468-e569 ; centralizer=t+u
orbit 6_2 12 b : -2*e139-4*e157+1/4*e468+4*e569 ; centralizer=t+u
orbit 6_2 13 : -2*e138-e147+e159-e239-2*e257 ; centralizer=t
orbit 6_2 14 : e159-1/2*e239-1/4*e249-e257-e258+e356-1/2*e456+1/2*e679-1/2*e689 ; centralizer=sl2R
orbit 6_2 15 a : -2*e135-e179+e468 ; centralizer=sl2R+t+u
orbit 6_2 15 b : 1/4*e137+8*e159-e468 ; centralizer=su2+t+u
orbit 6_2 16 : -2*e137+1/2*e149+2*e158-e259 ; centralizer=t+u
orbit 6_2 17 : e235+1/2*e245+1/2*e279+1/2*e289-1/2*e369+1/4*e469-e567+e568 ; centralizer=sl2R+t
orbit 6_2 18 a : e159+2*e237-1/2*e239-e257+e356+1/2*e679 ; centralizer=sl2R+u
orbit 6_2 18 b : 44/5*e137-3*e139-6*e157+2*e159-28/5*e237+e239+2*e257+10*e356+5*e679 ; centralizer=su2+u
orbit 6_2 18 c : 4/5*e137+e139+2*e157+2*e159+12/5*e237+e239+2*e257-10*e356-5*e679 ; centralizer=su2+u
orbit 6_2 19 a : e159-1/2*e239-e257-e259+e356+1/2*e679 ; centralizer=t+2*u
orbit 6_2 19 b : -4*e159+e239+2*e257+4*e259-2*e356-e679 ; centralizer=t+2*u
orbit 6_2 20 a : e235+1/2*e279-1/2*e369-e567 ; centralizer=2*t+2*u
orbit 6_2 20 b : 1/4*e148+4*e159-1/2*e469-2*e568 ; centralizer=2*t+2*u
orbit 6_2 21 : -2*e135-e179-e569 ; centralizer=2*t+u
orbit 6_2 22 a : e139-e148+2*e157 ; centralizer=sl2R+su12
orbit 6_2 22 b : 18*e137+22*e138+4*e139+11*e147+14*e148+5/2*e149+8*e157+10*e158+2*e159 ; centralizer=sl2R+su3
orbit 6_2 23 a : -2*e135-e179 ; centralizer=2*sl2R+t+u
orbit 6_2 23 b : e137+2*e159 ; centralizer=sl2R+su2+t+u
orbit 6_2 24 : -2*e137 ; centralizer=sl2R+sl2C+t+u
orbit 6_2 25 : 0 ; centralizer=sl3R+sl3C
"""

# worked-example matrices (entries in the scalar grammar)

# the nilpotent representative of complex orbit 47 and its companions
ORBIT47_E = "e136+e147-e245+e379+e569+e678"
ORBIT47_UE = "-e136-e147+e157-e235-e379-e469-e569-e678"

ORBIT47_G0 = [
    [0, 0, 0, 0, 0, 0, 0, 0, -1],
    [0, -1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, -1, 0, 0, 0, 0],
    [0, 0, 0, -1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, -1, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
]

# X(a,b) exponent rows of the identity component of the orbit-47 stabilizer
ORBIT47_TORUS_EXPONENTS = [
    [-1, -1], [-2, 0], [1, 0], [2, 2], [0, -2], [0, 1], [-1, -1], [1, 0], [0, 1],
]

ORBIT47_U0 = [
    ["i", "0", "0", "0", "0", "0", "0", "0", "i"],
    ["0", "-2*i", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "-1/2", "1/2", "0", "0", "0", "0"],
    ["0", "0", "1/2*i", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "-1/2*i", "-1/2*i", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "i", "-i", "0", "0"],
    ["0", "0", "0", "0", "0", "1", "1", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "1/2*i", "0"],
    ["1", "0", "0", "0", "0", "0", "0", "0", "-1"],
]

N3 = [
    [-1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, -1, 0, 0],
    [0, 0, 0, -1, 0, 0, 0, 0, 0],
    [0, 0, -1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, -1, 0, 0, 0],
    [0, -1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, -1, 0],
    [0, 0, 0, 0, -1, 0, 0, 0, 0],
]

G3 = [
    ["0", "0", "-1", "1", "0", "0", "0", "0", "0"],
    ["0", "-1", "0", "0", "0", "0", "1", "0", "0"],
    ["0", "0", "0", "0", "-1/2", "0", "0", "0", "1/2"],
    ["1/2*i", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "i", "i", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "i", "0", "0", "0"],
    ["0", "i", "0", "0", "0", "0", "i", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "1/2*i", "0"],
    ["0", "0", "0", "0", "-i", "0", "0", "0", "-i"],
]

# p_{x,y} = x * PXY_X + y * PXY_Y (the real representative of the fourth
# H^1(Gamma_3) class)
PXY_X = "e147-2*e169-e245+e289-e356-1/2*e378"
PXY_Y = "e124+e136+1/2*e238-e457+2*e569-e789"

MIXED_G0 = [
    ["0", "0", "i", "-1", "0", "0", "0", "0", "0"],
    ["0", "-1", "0", "0", "0", "0", "i", "0", "0"],
    ["0", "0", "0", "0", "-1/2*i", "0", "0", "0", "1/2"],
    ["-1/2", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "1", "-i", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "-1", "0", "0", "0"],
    ["0", "i", "0", "0", "0", "0", "-1", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "1/2", "0"],
    ["0", "0", "0", "0", "1", "0", "0", "0", "-i"],
]

MIXED_N0 = [
    ["1", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "i", "0", "0"],
    ["0", "0", "0", "i", "0", "0", "0", "0", "0"],
    ["0", "0", "i", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "i"],
    ["0", "0", "0", "0", "0", "1", "0", "0", "0"],
    ["0", "i", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "1", "0"],
    ["0", "0", "0", "0", "i", "0", "0", "0", "0"],
]

MIXED_A = ["-1", "-i", "-i", "-i", "i", "1", "-i", "1", "i"]  # diagonal

MIXED_E = "e159+e168+e267"
MIXED_E_PRIME = "-e159+i*e168-e267"
MIXED_E1 = "-2*e267-1/2*e349+1/4*e468"
MIXED_G0A_E = "2*e267-1/2*e349-1/4*e468"

# T1(s) = diag(1,s,s^-1,s,s^-1,1,s^-1,1,s), sigma(T1(s)) = T1(conj(s)^-1)
MIXED_T1_EXPONENTS = [[0], [1], [-1], [1], [-1], [0], [-1], [0], [1]]

# Gamma_3 of the semisimple worked example: order 72, on span(p1, p2)
GAMMA3_GENS = [
    [["0", "-1"], ["-1", "0"]],
    [["-1", "0"], ["0", "z3"]],
]
GAMMA3_H1_REPS = [
    [["1", "0"], ["0", "1"]],
    [["-1", "0"], ["0", "-1"]],
    [["-1", "0"], ["0", "1"]],
    [["0", "1"], ["1", "0"]],
]
"""H^1(Gamma_3) = {[1], [-1], [u1], [u2]}."""
