/* -- irecv.c -- generated by mpibind, do not edit */

#include "mpiimpl.h"

/* -- Begin Profiling Block -- */
#if defined(HAVE_PRAGMA_WEAK)
#pragma weak MPI_Irecv = PMPI_Irecv
#elif defined(HAVE_PRAGMA_HP_SEC_DEF)
#pragma _HP_SECONDARY_DEF PMPI_Irecv  MPI_Irecv
#elif defined(HAVE_PRAGMA_CRI_DUP)
#pragma _CRI duplicate MPI_Irecv as PMPI_Irecv
#elif defined(HAVE_WEAK_ATTRIBUTE)
int MPI_Irecv(void *buf, int count, MPI_Datatype datatype, int source, int tag, MPI_Comm comm, MPI_Request *request) __attribute__ ((weak, alias("PMPI_Irecv")));
#endif

/* Define MPICH_MPI_FROM_PMPI if weak symbols are not supported to build
   the MPI routines */
#ifndef MPICH_MPI_FROM_PMPI
#undef MPI_Irecv
#define MPI_Irecv PMPI_Irecv
#endif
/* -- End Profiling Block -- */

/*@
   MPI_Irecv - Begins a nonblocking receive

Input Parameters:
+ count - number of elements in receive buffer (non-negative integer)
. datatype - datatype of each receive buffer element (handle)
. source - rank of source or MPI_ANY_SOURCE (integer)
. tag - message tag or MPI_ANY_TAG (integer)
- comm - communicator (handle)

Output Parameters:
+ buf - initial address of receive buffer (choice)
- request - communication request (handle)

.N Errors
.N MPI_SUCCESS
@*/

int MPI_Irecv(void *buf, int count, MPI_Datatype datatype, int source, int tag, MPI_Comm comm, MPI_Request *request)
{
/* -- Begin Profiling Entry Hook -- */
/* -- End Profiling Entry Hook -- */
    int mpi_errno = MPI_SUCCESS;
    MPIR_Comm *comm_ptr = NULL;

    MPID_THREAD_CS_ENTER(GLOBAL, MPIR_THREAD_GLOBAL_ALLFUNC_MUTEX);
    MPIR_FUNC_TERSE_ENTER;

#ifdef HAVE_ERROR_CHECKING
    {
        MPID_BEGIN_ERROR_CHECKS;
        {
            MPIR_ERRTEST_USERBUFFER(buf, mpi_errno);
            MPIR_ERRTEST_COUNT(count, mpi_errno);
            MPIR_ERRTEST_DATATYPE_COMMITTED(datatype, mpi_errno);
            MPIR_ERRTEST_RECV_RANK(comm, source, mpi_errno);
            MPIR_ERRTEST_TAG(tag, mpi_errno);
            MPIR_ERRTEST_COMM(comm, mpi_errno);
        }
        MPID_END_ERROR_CHECKS;
    }
#endif /* HAVE_ERROR_CHECKING */

    /* convert handles to object pointers */
    MPIR_Comm_get_ptr(comm, comm_ptr);

    /* return early for trivial cases */
    if (source == MPI_PROC_NULL) {
        *request = MPI_REQUEST_NULL;
        goto fn_exit;
    }

    /* ... body of routine ... */
    mpi_errno = MPID_Irecv(buf, count, datatype, source, tag, comm_ptr, request);
    if (mpi_errno) {
        goto fn_fail;
    }
    /* ... end of body of routine ... */

  fn_exit:
    MPIR_FUNC_TERSE_EXIT;
    MPID_THREAD_CS_EXIT(GLOBAL, MPIR_THREAD_GLOBAL_ALLFUNC_MUTEX);
    return mpi_errno;

  fn_fail:
    /* --BEGIN ERROR HANDLING-- */
    mpi_errno = MPIR_Err_return_comm(comm_ptr, __func__, mpi_errno);
    goto fn_exit;
    /* --END ERROR HANDLING-- */
}

/* -- Begin Profiling Block -- */
#if defined(HAVE_PRAGMA_WEAK)
#pragma weak MPI_Irecv_c = PMPI_Irecv_c
#elif defined(HAVE_PRAGMA_HP_SEC_DEF)
#pragma _HP_SECONDARY_DEF PMPI_Irecv_c  MPI_Irecv_c
#elif defined(HAVE_PRAGMA_CRI_DUP)
#pragma _CRI duplicate MPI_Irecv_c as PMPI_Irecv_c
#elif defined(HAVE_WEAK_ATTRIBUTE)
int MPI_Irecv_c(void *buf, MPI_Count count, MPI_Datatype datatype, int source, int tag, MPI_Comm comm, MPI_Request *request) __attribute__ ((weak, alias("PMPI_Irecv_c")));
#endif

/* Define MPICH_MPI_FROM_PMPI if weak symbols are not supported to build
   the MPI routines */
#ifndef MPICH_MPI_FROM_PMPI
#undef MPI_Irecv_c
#define MPI_Irecv_c PMPI_Irecv_c
#endif
/* -- End Profiling Block -- */

/*@
   MPI_Irecv_c - Begins a nonblocking receive

Input Parameters:
+ count - number of elements in receive buffer (non-negative integer)
. datatype - datatype of each receive buffer element (handle)
. source - rank of source or MPI_ANY_SOURCE (integer)
. tag - message tag or MPI_ANY_TAG (integer)
- comm - communicator (handle)

Output Parameters:
+ buf - initial address of receive buffer (choice)
- request - communication request (handle)

.N Errors
.N MPI_SUCCESS
@*/

int MPI_Irecv_c(void *buf, MPI_Count count, MPI_Datatype datatype, int source, int tag, MPI_Comm comm, MPI_Request *request)
{
/* -- Begin Profiling Entry Hook -- */
/* -- End Profiling Entry Hook -- */
    int mpi_errno = MPI_SUCCESS;
    MPIR_Comm *comm_ptr = NULL;
    MPI_Aint count_internal;

    MPID_THREAD_CS_ENTER(GLOBAL, MPIR_THREAD_GLOBAL_ALLFUNC_MUTEX);
    MPIR_FUNC_TERSE_ENTER;

#ifdef HAVE_ERROR_CHECKING
    {
        MPID_BEGIN_ERROR_CHECKS;
        {
            MPIR_ERRTEST_USERBUFFER(buf, mpi_errno);
            MPIR_ERRTEST_COUNT(count, mpi_errno);
            MPIR_ERRTEST_DATATYPE_COMMITTED(datatype, mpi_errno);
            MPIR_ERRTEST_RECV_RANK(comm, source, mpi_errno);
            MPIR_ERRTEST_TAG(tag, mpi_errno);
            MPIR_ERRTEST_COMM(comm, mpi_errno);
        }
        MPID_END_ERROR_CHECKS;
    }
#endif /* HAVE_ERROR_CHECKING */

    /* convert handles to object pointers */
    MPIR_Comm_get_ptr(comm, comm_ptr);

    /* return early for trivial cases */
    if (source == MPI_PROC_NULL) {
        *request = MPI_REQUEST_NULL;
        goto fn_exit;
    }

    /* narrow large counts to the internal integer type */
    if (count > MPIR_AINT_MAX) {
        mpi_errno = MPIR_Err_create_code(MPI_SUCCESS, MPIR_ERR_RECOVERABLE, __func__,
                                         __LINE__, MPI_ERR_ARG, "**toobig", "**toobig %s", "count");
        goto fn_fail;
    }
    count_internal = (MPI_Aint) count;

    /* ... body of routine ... */
    mpi_errno = MPID_Irecv(buf, count_internal, datatype, source, tag, comm_ptr, request);
    if (mpi_errno) {
        goto fn_fail;
    }
    /* ... end of body of routine ... */

  fn_exit:
    MPIR_FUNC_TERSE_EXIT;
    MPID_THREAD_CS_EXIT(GLOBAL, MPIR_THREAD_GLOBAL_ALLFUNC_MUTEX);
    return mpi_errno;

  fn_fail:
    /* --BEGIN ERROR HANDLING-- */
    mpi_errno = MPIR_Err_return_comm(comm_ptr, __func__, mpi_errno);
    goto fn_exit;
    /* --END ERROR HANDLING-- */
}
