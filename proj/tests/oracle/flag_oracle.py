"""Independent exact oracle for flag-variety invariants.

Builds Cartan matrices and positive roots from scratch with fractions, then
prints dim, l_alpha, Vol(theta_0), the pairings Q and the reduced q for every
A/B/C/D flag of rank <= 4 with Picard number >= 2.

    python3 flag_oracle.py          # human-readable table
    python3 flag_oracle.py --cpp    # rows for tests/oracle_fixtures.hpp
"""
from fractions import Fraction as F
from math import gcd, factorial
from itertools import combinations
import sys

def cartan(fam, n):
    C=[[0]*n for _ in range(n)]
    for i in range(n): C[i][i]=2
    def link(i,j,a=-1,b=-1): C[i][j]=a; C[j][i]=b
    if fam in 'ABCD':
        for i in range(n-1): link(i,i+1)
    if fam=='B': C[n-2][n-1]=-2  # C_ij = <a_i,a_j^v>; a_n short: <a_{n-1}, a_n^v> = -2
    if fam=='C': C[n-1][n-2]=-2
    if fam=='D':
        C[n-2][n-1]=C[n-1][n-2]=0
        link(n-3,n-1)
    return C

def roots(C):
    n=len(C)
    simple=[tuple(1 if j==i else 0 for j in range(n)) for i in range(n)]
    allr=set(simple); layer=list(simple)
    while layer:
        new=[]
        for b in layer:
            for i in range(n):
                # p: how far down
                p=0; x=list(b)
                while True:
                    x[i]-=1
                    if tuple(x) in allr: p+=1
                    else: break
                pair=sum(b[j]*C[j][i] for j in range(n))
                q=p-pair
                if q>0:
                    y=list(b); y[i]+=1; y=tuple(y)
                    if y not in allr: allr.add(y); new.append(y)
        layer=new
    return sorted(allr, key=lambda r:(sum(r),[-v for v in r]))

def sym(fam,n):
    d=[1]*n
    if fam=='B': d=[2]*(n-1)+[1]
    if fam=='C': d=[1]*(n-1)+[2]
    return d

def setup(fam,n,I):
    C=cartan(fam,n); R=roots(C); d=sym(fam,n)
    for i in range(n):
        for j in range(n): assert C[i][j]*d[j]==C[j][i]*d[i]
    def dbeta(b): return F(sum(b[i]*b[j]*C[i][j]*d[j] for i in range(n) for j in range(n)),2)
    cor={b:[F(b[j]*d[j])/dbeta(b) for j in range(n)] for b in R}
    phi=[b for b in R if any(b[j] for j in range(n) if j not in I)]
    comp=[j for j in range(n) if j not in I]
    return C,R,cor,phi,comp

def pair(w,c): return sum(F(a)*b for a,b in zip(w,c))

def analyze(fam,n,I):
    C,R,cor,phi,comp=setup(fam,n,I)
    delta=[sum(sum(b[j]*C[j][i] for j in range(n)) for b in phi) for i in range(n)]
    ell=[delta[a] for a in comp]
    dim=len(phi)
    th=[0]*n
    for a in comp: th[a]=delta[a]
    vol=F(1)
    for b in phi: vol*=pair(th,cor[b])/pair([1]*n,cor[b])
    Q=[]
    for a in comp:
        w=[0]*n; w[a]=1
        lam=sum(pair(w,cor[b])/pair(th,cor[b]) for b in phi)
        Q.append(factorial(dim-1)*lam*vol)
    return ell,dim,vol,Q

if __name__=='__main__':
    for fam,rng in [('A',range(1,5)),('B',range(2,5)),('C',range(2,5)),('D',range(3,5))]:
        for n in rng:
            for k in range(0,n+1):
                for I in combinations(range(n),k):
                    if n-len(I)<2: continue
                    ell,dim,vol,Q=analyze(fam,n,set(I))
                    assert all(q.denominator==1 for q in Q)
                    Qi=[int(q) for q in Q]; t=0
                    for q in Qi: t=gcd(t,q)
                    qs=[q//t for q in Qi]
                    if '--cpp' in sys.argv:
                        lst=lambda xs: '{'+', '.join('"%s"' % x for x in xs)+'}'
                        print('    {"%s", %d, {%s}, %d, %s, "%s", %s, %s},' % (
                            fam, n, ', '.join(map(str, I)), dim, lst(ell), vol, lst(Qi), lst(qs)))
                    else:
                        print(fam,n,I,'dim',dim,'ell',ell,'vol',vol,'Q',Qi,'q',qs)
