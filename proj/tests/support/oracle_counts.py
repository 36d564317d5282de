from itertools import permutations, product, combinations
def comp(p,q): return tuple(p[q[i]] for i in range(len(q)))  # p after q
def close(gens,n):
    e=tuple(range(n)); S={e}; fr=[e]
    while fr:
        nf=[]
        for x in fr:
            for g in gens:
                y=comp(x,g)
                if y not in S: S.add(y); nf.append(y)
        fr=nf
    return S
def inv(p):
    r=[0]*len(p)
    for i,x in enumerate(p): r[x]=i
    return tuple(r)
def cyc(n,*cs):
    p=list(range(n))
    for c in cs:
        for i in range(len(c)): p[c[i]-1]=c[(i+1)%len(c)]-1
    return tuple(p)
def orbits_pairs(G):
    G=list(G); seen=set(); cnt=0; tot=0
    for a in G:
        for b in G:
            if comp(a,b)!=comp(b,a): continue
            tot+=1
            if (a,b) in seen: continue
            cnt+=1
            for g in G:
                gi=inv(g); seen.add((comp(comp(g,a),gi),comp(comp(g,b),gi)))
    return cnt,tot
def classes(G):
    G=list(G); seen=set(); sizes=[]
    for a in G:
        if a in seen: continue
        c={comp(comp(g,a),inv(g)) for g in G}; seen|=c; sizes.append(len(c))
    return sorted(sizes)
def subgroups(G):
    G=list(G); n=len(G[0]); subs=set()
    subs.add(frozenset(close([],n)))
    frontier=set(subs)
    while frontier:
        nf=set()
        for H in frontier:
            for g in G:
                if g in H: continue
                K=frozenset(close(list(H)+[g],n))
                if K not in subs: subs.add(K); nf.add(K)
        frontier=nf
    return subs
S3=close([cyc(3,(1,2)),cyc(3,(1,2,3))],3)
D4=close([cyc(4,(1,2,3,4)),cyc(4,(1,3))],4)
Q8=close([cyc(8,(1,2,3,4),(5,6,7,8)),cyc(8,(1,5,3,7),(2,8,4,6))],8)
S4=close([cyc(4,(1,2)),cyc(4,(1,2,3,4))],4)
A4=close([cyc(4,(1,2,3)),cyc(4,(2,3,4))],4)
for name,G in [('S3',S3),('D4',D4),('Q8',Q8),('S4',S4),('A4',A4)]:
    print(name,len(G),classes(G),orbits_pairs(G),len(subgroups(G)))
